//! Textual group specifications.
//!
//! Accepted forms (whitespace is ignored everywhere):
//!
//! * `S<n>`, `A<n>`, `C<n>`: symmetric, alternating and cyclic groups on `n` points;
//! * `D<2n>`: the dihedral group of order `2n` on `n` points (`D4` is the Klein
//!   four-group on 4 points);
//! * `(1,5,4,3,2);(1,2)(3,4)`: an explicit `;`-separated generator list.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Symmetric(usize),
    Alternating(usize),
    Cyclic(usize),
    /// Dihedral group of the given order (always even).
    Dihedral(usize),
    Generators(Vec<Permutation>),
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<GroupSpec> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty group specification".into()));
        }
        if compact.starts_with('(') {
            let gens = parse_generator_list(&compact, None)?;
            if gens.is_empty() {
                return Err(Error::Parse("a group needs at least one generator".into()));
            }
            let degree = gens.iter().map(Permutation::degree).max().unwrap_or(1);
            let gens = gens
                .iter()
                .map(|g| Permutation::parse(&g.to_string(), Some(degree)))
                .collect::<Result<Vec<_>>>()?;
            return Ok(GroupSpec::Generators(gens));
        }
        let (family, digits) = compact.split_at(1);
        let n: usize = digits
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| Error::Parse(format!("bad group specification {text:?}")))?;
        match family {
            "S" | "s" => Ok(GroupSpec::Symmetric(n)),
            "A" | "a" => Ok(GroupSpec::Alternating(n)),
            "C" | "c" => Ok(GroupSpec::Cyclic(n)),
            "D" | "d" if n.is_multiple_of(2) => Ok(GroupSpec::Dihedral(n)),
            "D" | "d" => Err(Error::Parse(format!("dihedral order must be even, got {n}"))),
            _ => Err(Error::Parse(format!("unknown group family in {text:?}"))),
        }
    }

    /// Number of points the group acts on.
    pub fn degree(&self) -> usize {
        match self {
            GroupSpec::Symmetric(n) | GroupSpec::Alternating(n) | GroupSpec::Cyclic(n) => *n,
            GroupSpec::Dihedral(4) => 4,
            GroupSpec::Dihedral(m) => (m / 2).max(2),
            GroupSpec::Generators(g) => g[0].degree(),
        }
    }

    pub fn generators(&self) -> Result<Vec<Permutation>> {
        let n = self.degree();
        let cyc = |c: &[usize]| Permutation::from_cycles(n, &[c.to_vec()]);
        let gens = match self {
            GroupSpec::Symmetric(1) | GroupSpec::Alternating(1..=2) | GroupSpec::Cyclic(1) => {
                vec![Permutation::identity(n)]
            }
            GroupSpec::Symmetric(n) => vec![cyc(&(1..=*n).collect::<Vec<_>>())?, cyc(&[1, 2])?],
            GroupSpec::Alternating(n) => (3..=*n).map(|i| cyc(&[1, 2, i])).collect::<Result<_>>()?,
            GroupSpec::Cyclic(n) => vec![cyc(&(1..=*n).collect::<Vec<_>>())?],
            GroupSpec::Dihedral(2) => vec![cyc(&[1, 2])?],
            GroupSpec::Dihedral(4) => vec![cyc(&[1, 2])?, cyc(&[3, 4])?],
            GroupSpec::Dihedral(m) => {
                let k = m / 2;
                let rotation = cyc(&(1..=k).collect::<Vec<_>>())?;
                let flips: Vec<Vec<usize>> = (2..=k / 2 + k % 2)
                    .filter(|&i| i != k + 2 - i)
                    .map(|i| vec![i, k + 2 - i])
                    .collect();
                let reflection = Permutation::from_cycles(k, &flips)?;
                vec![rotation, reflection]
            }
            GroupSpec::Generators(g) => g.clone(),
        };
        Ok(gens)
    }

    pub fn build(&self, bound: usize) -> Result<FiniteGroup> {
        FiniteGroup::generate(&self.generators()?, bound)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Symmetric(n) => write!(f, "S{n}"),
            GroupSpec::Alternating(n) => write!(f, "A{n}"),
            GroupSpec::Cyclic(n) => write!(f, "C{n}"),
            GroupSpec::Dihedral(n) => write!(f, "D{n}"),
            GroupSpec::Generators(g) => {
                let parts: Vec<String> = g.iter().map(ToString::to_string).collect();
                write!(f, "{}", parts.join(";"))
            }
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GroupSpec::parse(s)
    }
}

/// Parses a `;`-separated list of permutations in cycle notation.
///
/// An empty (or all-whitespace) string is the empty list.
pub fn parse_generator_list(text: &str, degree: Option<usize>) -> Result<Vec<Permutation>> {
    text.split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| Permutation::parse(s, degree))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_BOUND;

    fn order(s: &str) -> usize {
        GroupSpec::parse(s).unwrap().build(DEFAULT_BOUND).unwrap().order()
    }

    #[test]
    fn family_orders() {
        assert_eq!(order("S1"), 1);
        assert_eq!(order("S4"), 24);
        assert_eq!(order("A4"), 12);
        assert_eq!(order("A5"), 60);
        assert_eq!(order("C6"), 6);
        assert_eq!(order("D2"), 2);
        assert_eq!(order("D4"), 4);
        assert_eq!(order("D6"), 6);
        assert_eq!(order("D8"), 8);
        assert_eq!(order("D10"), 10);
        assert_eq!(order(" ( 1,5,4,3,2 ) ; (1,2)(3,4) "), 60);
    }

    #[test]
    fn dihedral_groups_are_not_cyclic() {
        for m in [6usize, 8, 10, 12] {
            let g = GroupSpec::Dihedral(m).build(DEFAULT_BOUND).unwrap();
            let max = (0..g.order()).map(|x| g.element_order(x)).max().unwrap();
            assert_eq!(max, m / 2, "D{m}");
        }
    }

    #[test]
    fn malformed_specs() {
        for bad in ["", "X4", "D7", "S", "S0", "(1,2", "(1,2);(a)"] {
            assert!(GroupSpec::parse(bad).is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn print_parse_round_trip() {
        for s in ["S4", "A5", "C6", "D8", "(1,5,4,3,2);(1,2)(3,4)"] {
            let spec = GroupSpec::parse(s).unwrap();
            assert_eq!(GroupSpec::parse(&spec.to_string()).unwrap(), spec);
        }
    }

    #[test]
    fn generator_lists() {
        assert!(parse_generator_list("", Some(4)).unwrap().is_empty());
        let g = parse_generator_list("(3,4); (1,2)(3,4)", Some(4)).unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g[1].degree(), 4);
    }
}
