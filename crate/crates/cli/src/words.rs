//! Splitting a comma-separated word into letter texts.

/// Splits on commas outside brackets and parentheses, so `(1,2),[2,1,3]`
/// is two letters.
pub fn split_letters(text: &str) -> Result<Vec<String>, String> {
    let mut out = Vec::new();
    let mut depth: i32 = 0;
    let mut in_string = false;
    let mut current = String::new();
    for ch in text.chars() {
        match ch {
            '"' => in_string = !in_string,
            '(' | '[' if !in_string => depth += 1,
            ')' | ']' if !in_string => {
                depth -= 1;
                if depth < 0 {
                    return Err(format!("unbalanced {ch:?} in word {text:?}"));
                }
            }
            ',' if depth == 0 && !in_string => {
                out.push(std::mem::take(&mut current).trim().to_owned());
                continue;
            }
            _ => {}
        }
        current.push(ch);
    }
    if depth != 0 || in_string {
        return Err(format!("unbalanced word {text:?}"));
    }
    out.push(current.trim().to_owned());
    if out.iter().any(String::is_empty) {
        return Err(format!("empty letter in word {text:?}"));
    }
    Ok(out)
}
