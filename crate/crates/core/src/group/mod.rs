//! Structure groups behind one element type.
//!
//! Products are diagrammatic throughout: `a.mul(b)` is "`a` then `b`". For
//! permutations this means `(a·b)(i) = b(a(i))`.

mod free;
mod parse;
mod perm;
mod repr;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use free::FreeWord;
pub use perm::Permutation;
pub use repr::{Matrix, Representation};

/// Upper bound on exhaustive enumeration.
pub const MAX_ENUMERATED_ORDER: u64 = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("backend mismatch: {left} vs {right}")]
    Mismatch { left: String, right: String },
    #[error("syntax error in element {text:?}: {message}")]
    Syntax { text: String, message: String },
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("value {value} out of range for {group}")]
    OutOfRange { value: String, group: String },
    #[error("infinite backend {0} cannot be enumerated")]
    Infinite(String),
    #[error("group of order {0} is too large to enumerate")]
    TooLarge(u64),
    #[error("invalid group descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("representation: {0}")]
    Representation(String),
}

/// Which group, with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", try_from = "RawDescriptor", into = "RawDescriptor")]
pub enum GroupDescriptor {
    /// Free group on the named generators.
    Free(Vec<String>),
    /// Integers modulo `n`.
    Cyclic(u64),
    /// Permutations of `{1..n}`.
    Symmetric(usize),
    /// Symmetries of the regular `n`-gon, order `2n`.
    Dihedral(u64),
    Product(Vec<GroupDescriptor>),
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
enum RawDescriptor {
    Free(Vec<String>),
    Cyclic(u64),
    Symmetric(usize),
    Dihedral(u64),
    Product(Vec<GroupDescriptor>),
}

impl TryFrom<RawDescriptor> for GroupDescriptor {
    type Error = GroupError;

    fn try_from(raw: RawDescriptor) -> Result<Self, Self::Error> {
        let d = match raw {
            RawDescriptor::Free(g) => GroupDescriptor::Free(g),
            RawDescriptor::Cyclic(n) => GroupDescriptor::Cyclic(n),
            RawDescriptor::Symmetric(n) => GroupDescriptor::Symmetric(n),
            RawDescriptor::Dihedral(n) => GroupDescriptor::Dihedral(n),
            RawDescriptor::Product(f) => GroupDescriptor::Product(f),
        };
        d.validate()?;
        Ok(d)
    }
}

impl From<GroupDescriptor> for RawDescriptor {
    fn from(d: GroupDescriptor) -> Self {
        match d {
            GroupDescriptor::Free(g) => RawDescriptor::Free(g),
            GroupDescriptor::Cyclic(n) => RawDescriptor::Cyclic(n),
            GroupDescriptor::Symmetric(n) => RawDescriptor::Symmetric(n),
            GroupDescriptor::Dihedral(n) => RawDescriptor::Dihedral(n),
            GroupDescriptor::Product(f) => RawDescriptor::Product(f),
        }
    }
}

/// A group element in normal form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Free(FreeWord),
    Cyclic { modulus: u64, value: u64 },
    Perm(Permutation),
    /// `s^reflection · r^rotation`.
    Dihedral { n: u64, rotation: u64, reflection: bool },
    Product(Vec<Element>),
}

impl GroupDescriptor {
    pub fn validate(&self) -> Result<(), GroupError> {
        let bad = |m: String| Err(GroupError::InvalidDescriptor(m));
        match self {
            GroupDescriptor::Free(gens) => {
                let mut seen = std::collections::BTreeSet::new();
                for g in gens {
                    if !parse::is_generator_name(g) {
                        return bad(format!("invalid generator name {g:?}"));
                    }
                    if !seen.insert(g) {
                        return bad(format!("duplicate generator {g:?}"));
                    }
                }
                Ok(())
            }
            GroupDescriptor::Cyclic(0) | GroupDescriptor::Dihedral(0) | GroupDescriptor::Symmetric(0) => {
                bad("order parameter must be at least 1".into())
            }
            GroupDescriptor::Product(fs) if fs.is_empty() => bad("empty product".into()),
            GroupDescriptor::Product(fs) => fs.iter().try_for_each(GroupDescriptor::validate),
            _ => Ok(()),
        }
    }

    pub fn identity(&self) -> Element {
        match self {
            GroupDescriptor::Free(_) => Element::Free(FreeWord::identity()),
            GroupDescriptor::Cyclic(n) => Element::Cyclic { modulus: *n, value: 0 },
            GroupDescriptor::Symmetric(n) => Element::Perm(Permutation::identity(*n)),
            GroupDescriptor::Dihedral(n) => Element::Dihedral { n: *n, rotation: 0, reflection: false },
            GroupDescriptor::Product(fs) => Element::Product(fs.iter().map(Self::identity).collect()),
        }
    }

    /// Whether `a` is an element of this group.
    pub fn contains(&self, a: &Element) -> bool {
        match (self, a) {
            (GroupDescriptor::Free(gens), Element::Free(w)) => w.generators().all(|g| gens.iter().any(|h| h == g)),
            (GroupDescriptor::Cyclic(n), Element::Cyclic { modulus, value }) => n == modulus && value < n,
            (GroupDescriptor::Symmetric(n), Element::Perm(p)) => p.degree() == *n,
            (GroupDescriptor::Dihedral(n), Element::Dihedral { n: m, rotation, .. }) => n == m && rotation < n,
            (GroupDescriptor::Product(fs), Element::Product(es)) => {
                fs.len() == es.len() && fs.iter().zip(es).all(|(f, e)| f.contains(e))
            }
            _ => false,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.order().is_some()
    }

    /// Group order, `None` for nontrivial free groups. Saturates at `u64::MAX`.
    pub fn order(&self) -> Option<u64> {
        match self {
            GroupDescriptor::Free(g) if g.is_empty() => Some(1),
            GroupDescriptor::Free(_) => None,
            GroupDescriptor::Cyclic(n) => Some(*n),
            GroupDescriptor::Symmetric(n) => Some((1..=*n as u64).fold(1u64, |a, b| a.saturating_mul(b))),
            GroupDescriptor::Dihedral(n) => Some(n.saturating_mul(2)),
            GroupDescriptor::Product(fs) => fs
                .iter()
                .try_fold(1u64, |acc, f| f.order().map(|o| acc.saturating_mul(o))),
        }
    }

    /// Every element, identity first.
    pub fn elements(&self) -> Result<Vec<Element>, GroupError> {
        let order = self.order().ok_or_else(|| GroupError::Infinite(self.to_string()))?;
        if order > MAX_ENUMERATED_ORDER {
            return Err(GroupError::TooLarge(order));
        }
        Ok(match self {
            GroupDescriptor::Free(_) => vec![self.identity()],
            GroupDescriptor::Cyclic(n) => (0..*n).map(|value| Element::Cyclic { modulus: *n, value }).collect(),
            GroupDescriptor::Symmetric(n) => Permutation::all(*n).into_iter().map(Element::Perm).collect(),
            GroupDescriptor::Dihedral(n) => [false, true]
                .into_iter()
                .flat_map(|reflection| {
                    (0..*n).map(move |rotation| Element::Dihedral { n: *n, rotation, reflection })
                })
                .collect(),
            GroupDescriptor::Product(fs) => {
                let mut acc: Vec<Vec<Element>> = vec![vec![]];
                for f in fs {
                    let elems = f.elements()?;
                    acc = acc
                        .into_iter()
                        .flat_map(|prefix| {
                            elems.iter().map(move |e| {
                                let mut p = prefix.clone();
                                p.push(e.clone());
                                p
                            })
                        })
                        .collect();
                }
                acc.into_iter().map(Element::Product).collect()
            }
        })
    }

    /// A generating set.
    pub fn generators(&self) -> Vec<Element> {
        match self {
            GroupDescriptor::Free(gens) => gens.iter().map(|g| Element::Free(FreeWord::generator(g.clone()))).collect(),
            GroupDescriptor::Cyclic(1) => vec![],
            GroupDescriptor::Cyclic(n) => vec![Element::Cyclic { modulus: *n, value: 1 }],
            GroupDescriptor::Symmetric(n) if *n < 2 => vec![],
            GroupDescriptor::Symmetric(n) => {
                let swap = Permutation::from_cycles(*n, &[vec![1, 2]]).expect("n >= 2");
                let long = Permutation::from_cycles(*n, &[(1..=*n).collect()]).expect("valid cycle");
                vec![Element::Perm(swap), Element::Perm(long)]
            }
            GroupDescriptor::Dihedral(n) => vec![
                Element::Dihedral { n: *n, rotation: 1 % n, reflection: false },
                Element::Dihedral { n: *n, rotation: 0, reflection: true },
            ],
            GroupDescriptor::Product(fs) => {
                let ids: Vec<Element> = fs.iter().map(Self::identity).collect();
                fs.iter()
                    .enumerate()
                    .flat_map(|(i, f)| {
                        let ids = ids.clone();
                        f.generators().into_iter().map(move |g| {
                            let mut v = ids.clone();
                            v[i] = g;
                            Element::Product(v)
                        })
                    })
                    .collect()
            }
        }
    }

    /// Adds a generator to a free group; no-op if already present.
    pub fn add_generator(&mut self, name: &str) -> Result<(), GroupError> {
        match self {
            GroupDescriptor::Free(gens) => {
                if !parse::is_generator_name(name) {
                    return Err(GroupError::InvalidDescriptor(format!("invalid generator name {name:?}")));
                }
                if !gens.iter().any(|g| g == name) {
                    gens.push(name.to_owned());
                }
                Ok(())
            }
            _ => Err(GroupError::UnknownGenerator(name.to_owned())),
        }
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDescriptor::Free(g) => write!(f, "F<{}>", g.join(",")),
            GroupDescriptor::Cyclic(n) => write!(f, "Z{n}"),
            GroupDescriptor::Symmetric(n) => write!(f, "S{n}"),
            GroupDescriptor::Dihedral(n) => write!(f, "D{n}"),
            GroupDescriptor::Product(fs) => {
                let parts: Vec<String> = fs.iter().map(ToString::to_string).collect();
                write!(f, "{}", parts.join(" x "))
            }
        }
    }
}

impl Element {
    fn backend(&self) -> String {
        match self {
            Element::Free(_) => "free".into(),
            Element::Cyclic { modulus, .. } => format!("Z{modulus}"),
            Element::Perm(p) => format!("S{}", p.degree()),
            Element::Dihedral { n, .. } => format!("D{n}"),
            Element::Product(es) => format!("product of {}", es.len()),
        }
    }

    fn mismatch(&self, other: &Element) -> GroupError {
        GroupError::Mismatch { left: self.backend(), right: other.backend() }
    }

    /// Diagrammatic product: `self` then `other`.
    pub fn mul(&self, other: &Element) -> Result<Element, GroupError> {
        Ok(match (self, other) {
            (Element::Free(a), Element::Free(b)) => Element::Free(a.mul(b)),
            (Element::Cyclic { modulus: n, value: a }, Element::Cyclic { modulus: m, value: b }) if n == m => {
                Element::Cyclic { modulus: *n, value: ((*a as u128 + *b as u128) % *n as u128) as u64 }
            }
            (Element::Perm(a), Element::Perm(b)) if a.degree() == b.degree() => Element::Perm(a.then(b)),
            (
                Element::Dihedral { n, rotation: k1, reflection: f1 },
                Element::Dihedral { n: m, rotation: k2, reflection: f2 },
            ) if n == m => {
                // r^k s = s r^-k
                let k1 = if *f2 { (n - k1) % n } else { *k1 };
                Element::Dihedral { n: *n, rotation: (k1 + k2) % n, reflection: f1 ^ f2 }
            }
            (Element::Product(a), Element::Product(b)) if a.len() == b.len() => {
                Element::Product(a.iter().zip(b).map(|(x, y)| x.mul(y)).collect::<Result<_, _>>()?)
            }
            _ => return Err(self.mismatch(other)),
        })
    }

    pub fn inverse(&self) -> Element {
        match self {
            Element::Free(w) => Element::Free(w.inverse()),
            Element::Cyclic { modulus, value } => Element::Cyclic { modulus: *modulus, value: (modulus - value) % modulus },
            Element::Perm(p) => Element::Perm(p.inverse()),
            Element::Dihedral { n, rotation, reflection: true } => {
                Element::Dihedral { n: *n, rotation: *rotation, reflection: true }
            }
            Element::Dihedral { n, rotation, reflection: false } => {
                Element::Dihedral { n: *n, rotation: (n - rotation) % n, reflection: false }
            }
            Element::Product(es) => Element::Product(es.iter().map(Element::inverse).collect()),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            Element::Free(w) => w.is_identity(),
            Element::Cyclic { value, .. } => *value == 0,
            Element::Perm(p) => p.is_identity(),
            Element::Dihedral { rotation, reflection, .. } => *rotation == 0 && !reflection,
            Element::Product(es) => es.iter().all(Element::is_identity),
        }
    }

    /// `self⁻¹ · other`.
    pub fn left_divide(&self, other: &Element) -> Result<Element, GroupError> {
        self.inverse().mul(other)
    }

    /// Ordered product of a sequence, starting from `identity`.
    pub fn product<'a>(
        identity: &Element,
        items: impl IntoIterator<Item = &'a Element>,
    ) -> Result<Element, GroupError> {
        items.into_iter().try_fold(identity.clone(), |acc, x| acc.mul(x))
    }
}

impl fmt::Display for Element {
    /// Element grammar; the identity prints as `e` in every backend.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("e");
        }
        match self {
            Element::Free(w) => write!(f, "{w}"),
            Element::Cyclic { value, .. } => write!(f, "{value}"),
            Element::Perm(p) => write!(f, "{p}"),
            Element::Dihedral { rotation, reflection, .. } => {
                let r = match rotation {
                    0 => String::new(),
                    1 => "r".into(),
                    k => format!("r^{k}"),
                };
                match (reflection, r.is_empty()) {
                    (true, true) => f.write_str("s"),
                    (true, false) => write!(f, "s*{r}"),
                    (false, _) => f.write_str(&r),
                }
            }
            Element::Product(es) => {
                let parts: Vec<String> = es.iter().map(ToString::to_string).collect();
                f.write_str(&serde_json::to_string(&parts).expect("strings serialize"))
            }
        }
    }
}

/// Parses an element of `group`.
pub fn parse_element(text: &str, group: &GroupDescriptor) -> Result<Element, GroupError> {
    parse::parse(text, group, false).map(|(e, _)| e)
}

/// Parses an element, adding unknown generators to a free `group`.
pub fn parse_element_extending(text: &str, group: &mut GroupDescriptor) -> Result<Element, GroupError> {
    let (e, fresh) = parse::parse(text, group, true)?;
    for g in fresh {
        group.add_generator(&g)?;
    }
    Ok(e)
}

pub fn format_element(a: &Element) -> String {
    a.to_string()
}

/// `{z : z·u = u·z for every generator u}`.
pub fn center(group: &GroupDescriptor) -> Result<Vec<Element>, GroupError> {
    let gens = group.generators();
    let mut out = Vec::new();
    for z in group.elements()? {
        let mut central = true;
        for u in &gens {
            if z.mul(u)? != u.mul(&z)? {
                central = false;
                break;
            }
        }
        if central {
            out.push(z);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(text: &str) -> Element {
        parse_element(text, &GroupDescriptor::Symmetric(3)).unwrap()
    }

    #[test]
    fn free_cancellation() {
        let g = GroupDescriptor::Free(vec!["x".into()]);
        let x = parse_element("x", &g).unwrap();
        assert!(x.mul(&x.inverse()).unwrap().is_identity());
        assert_eq!(x.mul(&x.inverse()).unwrap(), g.identity());
    }

    #[test]
    fn cyclic_addition() {
        let g = GroupDescriptor::Cyclic(12);
        let a = parse_element("7", &g).unwrap();
        let b = parse_element("8", &g).unwrap();
        assert_eq!(a.mul(&b).unwrap().to_string(), "3");
    }

    #[test]
    fn permutation_order_is_left_to_right() {
        // (12) first, then (23): 1 -> 2 -> 3, 3 -> 3 -> 2, 2 -> 1 -> 1
        assert_eq!(perm("(1 2)").mul(&perm("(2 3)")).unwrap(), perm("(1 3 2)"));
        assert_eq!(perm("(2 3)").mul(&perm("(1 2)")).unwrap(), perm("(1 2 3)"));
    }

    #[test]
    fn backend_mismatch() {
        let a = parse_element("1", &GroupDescriptor::Cyclic(4)).unwrap();
        let b = parse_element("1", &GroupDescriptor::Cyclic(5)).unwrap();
        assert!(matches!(a.mul(&b), Err(GroupError::Mismatch { .. })));
        assert!(matches!(a.mul(&perm("(1 2)")), Err(GroupError::Mismatch { .. })));
    }

    #[test]
    fn dihedral_relations() {
        let g = GroupDescriptor::Dihedral(4);
        let r = parse_element("r", &g).unwrap();
        let s = parse_element("s", &g).unwrap();
        // s r s = r^-1
        let srs = s.mul(&r).unwrap().mul(&s).unwrap();
        assert_eq!(srs, r.inverse());
        assert_eq!(s.mul(&s).unwrap(), g.identity());
        let all = g.elements().unwrap();
        assert_eq!(all.len(), 8);
        for a in &all {
            assert_eq!(a.mul(&a.inverse()).unwrap(), g.identity());
        }
    }

    #[test]
    fn centers() {
        let show = |g: GroupDescriptor| -> Vec<String> {
            center(&g).unwrap().iter().map(ToString::to_string).collect()
        };
        assert_eq!(show(GroupDescriptor::Symmetric(3)), ["e"]);
        assert_eq!(show(GroupDescriptor::Symmetric(4)), ["e"]);
        assert_eq!(show(GroupDescriptor::Cyclic(4)).len(), 4);
        assert_eq!(show(GroupDescriptor::Dihedral(4)), ["e", "r^2"]);
        assert_eq!(show(GroupDescriptor::Symmetric(2)).len(), 2);
        assert!(matches!(
            center(&GroupDescriptor::Free(vec!["x".into(), "y".into()])),
            Err(GroupError::Infinite(_))
        ));
        assert_eq!(show(GroupDescriptor::Free(vec![])), ["e"]);
    }

    #[test]
    fn descriptor_json() {
        let d: GroupDescriptor = serde_json::from_str(r#"{"symmetric":3}"#).unwrap();
        assert_eq!(d, GroupDescriptor::Symmetric(3));
        let d: GroupDescriptor = serde_json::from_str(r#"{"product":[{"cyclic":2},{"free":["x"]}]}"#).unwrap();
        assert_eq!(serde_json::to_string(&d).unwrap(), r#"{"product":[{"cyclic":2},{"free":["x"]}]}"#);
        assert!(serde_json::from_str::<GroupDescriptor>(r#"{"cyclic":0}"#).is_err());
        assert!(serde_json::from_str::<GroupDescriptor>(r#"{"free":["x","x"]}"#).is_err());
        assert!(serde_json::from_str::<GroupDescriptor>(r#"{"lie":3}"#).is_err());
    }

    #[test]
    fn product_elements() {
        let g = GroupDescriptor::Product(vec![GroupDescriptor::Cyclic(2), GroupDescriptor::Symmetric(3)]);
        assert_eq!(g.elements().unwrap().len(), 12);
        assert_eq!(g.elements().unwrap()[0], g.identity());
        assert_eq!(center(&g).unwrap().len(), 2);
    }
}
