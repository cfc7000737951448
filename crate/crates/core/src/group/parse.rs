//! Element grammar.
//!
//! ```text
//! free       e | gen ('^' int)? ('*' gen ('^' int)?)*
//! cyclic     e | int            (0 <= int < n)
//! symmetric  e | () | (1 2 3)(4 5) | [2,3,1]
//! dihedral   e | r^k | s | s*r^k
//! product    e | ["elem", "elem", ...]
//! ```

use super::{Element, FreeWord, GroupDescriptor, GroupError, Permutation};

pub(super) fn is_generator_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_alphabetic() || c == '_' => {}
        _ => return false,
    }
    name != "e" && chars.all(|c| c.is_alphanumeric() || c == '_')
}

fn syntax(text: &str, message: impl Into<String>) -> GroupError {
    GroupError::Syntax { text: text.to_owned(), message: message.into() }
}

fn out_of_range(value: impl ToString, group: &GroupDescriptor) -> GroupError {
    GroupError::OutOfRange { value: value.to_string(), group: group.to_string() }
}

/// Returns the element and, when `extend` is set, generators not yet in a
/// free descriptor.
pub(super) fn parse(
    text: &str,
    group: &GroupDescriptor,
    extend: bool,
) -> Result<(Element, Vec<String>), GroupError> {
    let t = text.trim();
    if t == "e" {
        return Ok((group.identity(), vec![]));
    }
    match group {
        GroupDescriptor::Free(gens) => parse_free(t, gens, extend),
        GroupDescriptor::Cyclic(n) => {
            let v: i128 = t.parse().map_err(|_| syntax(t, "expected an integer residue"))?;
            if v < 0 || v >= *n as i128 {
                return Err(out_of_range(v, group));
            }
            Ok((Element::Cyclic { modulus: *n, value: v as u64 }, vec![]))
        }
        GroupDescriptor::Symmetric(n) => parse_perm(t, *n).map(|p| (Element::Perm(p), vec![])),
        GroupDescriptor::Dihedral(n) => parse_dihedral(t, *n).map(|e| (e, vec![])),
        GroupDescriptor::Product(fs) => {
            let parts: Vec<String> =
                serde_json::from_str(t).map_err(|e| syntax(t, format!("expected an array of element strings: {e}")))?;
            if parts.len() != fs.len() {
                return Err(syntax(t, format!("expected {} factors, found {}", fs.len(), parts.len())));
            }
            let mut fresh = Vec::new();
            let mut es = Vec::with_capacity(parts.len());
            for (p, f) in parts.iter().zip(fs) {
                let (e, mut new) = parse(p, f, extend)?;
                fresh.append(&mut new);
                es.push(e);
            }
            Ok((Element::Product(es), fresh))
        }
    }
}

fn parse_free(t: &str, gens: &[String], extend: bool) -> Result<(Element, Vec<String>), GroupError> {
    let mut syllables = Vec::new();
    let mut fresh: Vec<String> = Vec::new();
    for raw in t.split('*') {
        let raw = raw.trim();
        let (name, exp) = match raw.split_once('^') {
            Some((g, k)) => {
                let k: i64 = k.trim().parse().map_err(|_| syntax(t, format!("bad exponent in {raw:?}")))?;
                (g.trim(), k)
            }
            None => (raw, 1),
        };
        if name == "e" {
            continue;
        }
        if !is_generator_name(name) {
            return Err(syntax(t, format!("bad generator {name:?}")));
        }
        if !gens.iter().any(|g| g == name) {
            if !extend {
                return Err(GroupError::UnknownGenerator(name.to_owned()));
            }
            if !fresh.iter().any(|g| g == name) {
                fresh.push(name.to_owned());
            }
        }
        syllables.push((name.to_owned(), exp));
    }
    Ok((Element::Free(FreeWord::from_syllables(syllables)), fresh))
}

fn parse_perm(t: &str, n: usize) -> Result<Permutation, GroupError> {
    let group = GroupDescriptor::Symmetric(n);
    if let Some(body) = t.strip_prefix('[') {
        let body = body.strip_suffix(']').ok_or_else(|| syntax(t, "unterminated one-line form"))?;
        let images = body
            .split(',')
            .map(|s| s.trim().parse::<usize>().map_err(|_| syntax(t, "expected integers")))
            .collect::<Result<Vec<_>, _>>()?;
        if images.len() != n {
            return Err(out_of_range(t, &group));
        }
        let zero_based = images.iter().map(|&i| i.checked_sub(1)).collect::<Option<Vec<_>>>();
        return zero_based
            .and_then(Permutation::from_images)
            .ok_or_else(|| out_of_range(t, &group));
    }
    let mut cycles = Vec::new();
    let mut rest = t;
    while !rest.is_empty() {
        let open = rest.strip_prefix('(').ok_or_else(|| syntax(t, "expected '('"))?;
        let (body, after) = open.split_once(')').ok_or_else(|| syntax(t, "unterminated cycle"))?;
        let points = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().map_err(|_| syntax(t, format!("bad point {s:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        let mut sorted = points.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != points.len() {
            return Err(syntax(t, "repeated point in cycle"));
        }
        if !points.is_empty() {
            cycles.push(points);
        }
        rest = after.trim_start();
    }
    Permutation::from_cycles(n, &cycles).ok_or_else(|| out_of_range(t, &group))
}

fn parse_dihedral(t: &str, n: u64) -> Result<Element, GroupError> {
    let mut reflection = false;
    let mut rotation: i128 = 0;
    for raw in t.split('*') {
        let raw = raw.trim();
        if raw == "s" {
            if reflection || rotation != 0 {
                return Err(syntax(t, "expected s*r^k"));
            }
            reflection = true;
            continue;
        }
        let k = match raw.strip_prefix('r') {
            Some("") => 1,
            Some(k) => k
                .strip_prefix('^')
                .and_then(|k| k.trim().parse::<i128>().ok())
                .ok_or_else(|| syntax(t, format!("bad rotation {raw:?}")))?,
            None => return Err(syntax(t, format!("unexpected {raw:?}"))),
        };
        rotation += k;
    }
    let rotation = rotation.rem_euclid(n as i128) as u64;
    Ok(Element::Dihedral { n, rotation, reflection })
}
