use serde::{Deserialize, Serialize};

/// Path quantifier of an atom. Word automata use [`Modality::Next`] only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Modality {
    Diamond,
    Box,
    Next,
}

/// Positive boolean combination of modal atoms over automaton states.
///
/// `And` and `Or` are n-ary with at least one operand. The constructors
/// [`Formula::and`] and [`Formula::or`] flatten nested operators of the same
/// kind, sort and deduplicate operands, and collapse singletons.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Formula {
    Atom(Modality, usize),
    And(Vec<Formula>),
    Or(Vec<Formula>),
}

impl Formula {
    pub fn atom(m: Modality, q: usize) -> Formula {
        Formula::Atom(m, q)
    }

    pub fn next(q: usize) -> Formula {
        Formula::Atom(Modality::Next, q)
    }

    pub fn and(operands: Vec<Formula>) -> Formula {
        Self::join(operands, true)
    }

    pub fn or(operands: Vec<Formula>) -> Formula {
        Self::join(operands, false)
    }

    fn join(operands: Vec<Formula>, conjunction: bool) -> Formula {
        assert!(!operands.is_empty(), "boolean operator needs an operand");
        let mut flat = Vec::with_capacity(operands.len());
        for f in operands {
            match f {
                Formula::And(inner) if conjunction => flat.extend(inner),
                Formula::Or(inner) if !conjunction => flat.extend(inner),
                other => flat.push(other),
            }
        }
        flat.sort_unstable();
        flat.dedup();
        if flat.len() == 1 {
            return flat.pop().unwrap();
        }
        if conjunction {
            Formula::And(flat)
        } else {
            Formula::Or(flat)
        }
    }

    /// Visits every atom, left to right.
    pub fn for_each_atom(&self, f: &mut impl FnMut(Modality, usize)) {
        match self {
            Formula::Atom(m, q) => f(*m, *q),
            Formula::And(bs) | Formula::Or(bs) => bs.iter().for_each(|b| b.for_each_atom(f)),
        }
    }

    pub fn states(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.for_each_atom(&mut |_, q| out.push(q));
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Replaces every atom by a formula.
    pub fn substitute(&self, f: &mut impl FnMut(Modality, usize) -> Formula) -> Formula {
        match self {
            Formula::Atom(m, q) => f(*m, *q),
            Formula::And(bs) => Formula::and(bs.iter().map(|b| b.substitute(f)).collect()),
            Formula::Or(bs) => Formula::or(bs.iter().map(|b| b.substitute(f)).collect()),
        }
    }

    /// Swaps conjunction with disjunction and diamond with box.
    pub fn dual(&self) -> Formula {
        match self {
            Formula::Atom(Modality::Diamond, q) => Formula::Atom(Modality::Box, *q),
            Formula::Atom(Modality::Box, q) => Formula::Atom(Modality::Diamond, *q),
            Formula::Atom(Modality::Next, q) => Formula::Atom(Modality::Next, *q),
            Formula::And(bs) => Formula::Or(bs.iter().map(Formula::dual).collect()),
            Formula::Or(bs) => Formula::And(bs.iter().map(Formula::dual).collect()),
        }
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            Formula::Atom(..) => 1,
            Formula::And(bs) | Formula::Or(bs) => 1 + bs.iter().map(Formula::size).sum::<usize>(),
        }
    }

    /// Immediate operands; empty for atoms.
    pub fn operands(&self) -> &[Formula] {
        match self {
            Formula::Atom(..) => &[],
            Formula::And(bs) | Formula::Or(bs) => bs,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors_flatten() {
        let f = Formula::or(vec![
            Formula::next(0),
            Formula::or(vec![Formula::next(1), Formula::next(2)]),
        ]);
        assert_eq!(f, Formula::Or(vec![Formula::next(0), Formula::next(1), Formula::next(2)]));
        assert_eq!(Formula::and(vec![Formula::next(3)]), Formula::next(3));
        let mixed = Formula::and(vec![Formula::next(0), f.clone()]);
        assert_eq!(mixed.operands().len(), 2);
    }

    #[test]
    fn duality_is_an_involution() {
        let f = Formula::and(vec![
            Formula::atom(Modality::Diamond, 0),
            Formula::or(vec![Formula::atom(Modality::Box, 1), Formula::atom(Modality::Diamond, 2)]),
        ]);
        assert_eq!(f.dual().dual(), f);
        assert!(matches!(f.dual(), Formula::Or(_)));
        assert_eq!(f.states(), vec![0, 1, 2]);
        assert_eq!(f.size(), 5);
    }
}
