//! Permutations of `{1, ..., n}`.
//!
//! Every product in this crate is read left to right: `p * q` first applies
//! `p`, then `q`, so that `i^(pq) = (i^p)^q`.
//!
//! Points are 1-based in the textual cycle notation and 0-based in the image
//! table exposed by [`Permutation::images`].

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bijection of `{1, ..., n}` stored as an image table.
///
/// The derived ordering is lexicographic on the image table, which makes the
/// identity the smallest permutation of its degree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::Parse(format!("{images:?} is not a bijection of 0..{n}")));
            }
            seen[x] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|x| x as u32).collect(),
        })
    }

    /// Builds a permutation of the given degree from 1-based cycles.
    ///
    /// Cycles are multiplied left to right, so overlapping cycles are allowed.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut acc = Permutation::identity(degree);
        for cycle in cycles {
            let mut images: Vec<usize> = (0..degree).collect();
            let mut seen = std::collections::HashSet::new();
            for &p in cycle {
                if p == 0 || p > degree {
                    return Err(Error::Parse(format!("point {p} out of range 1..={degree}")));
                }
                if !seen.insert(p) {
                    return Err(Error::Parse(format!("point {p} repeated in a cycle")));
                }
            }
            for (k, &p) in cycle.iter().enumerate() {
                images[p - 1] = cycle[(k + 1) % cycle.len()] - 1;
            }
            acc = &acc * &Permutation::from_images(images)?;
        }
        Ok(acc)
    }

    /// Parses cycle notation such as `(1,5,4,3,2)`, `(1,2)(3,4)` or `()`.
    ///
    /// When `degree` is `None` the degree is the largest point mentioned.
    pub fn parse(text: &str, degree: Option<usize>) -> Result<Self> {
        let cycles = parse_cycles(text)?;
        let max = cycles.iter().flatten().copied().max().unwrap_or(1);
        let degree = match degree {
            Some(d) if d < max => {
                return Err(Error::Parse(format!("point {max} exceeds degree {d}")));
            }
            Some(d) => d,
            None => max,
        };
        Permutation::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based image table.
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// The product `self * other`: apply `self` first, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Permutation {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Permutation { images }
    }

    /// Cycles with 1-based points, fixed points included as singletons.
    ///
    /// Each cycle starts at its smallest point and cycles are ordered by that
    /// point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.apply(p);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    pub fn order(&self) -> usize {
        self.cycles().iter().fold(1, |acc, c| lcm(acc, c.len()))
    }

    pub fn pow(&self, exponent: usize) -> Permutation {
        let mut acc = Permutation::identity(self.degree());
        for _ in 0..exponent {
            acc = &acc * self;
        }
        acc
    }

    /// Conjugate `g⁻¹ self g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        &(&g.inverse() * self) * g
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Panics on a degree mismatch; use [`Permutation::compose`] for a checked product.
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs).expect("degree mismatch in permutation product")
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut cycles = Vec::new();
    let mut rest = compact.as_str();
    if rest.is_empty() {
        return Err(Error::Parse("empty permutation".into()));
    }
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(format!("expected '(' in {text:?}")))?;
        let close = body
            .find(')')
            .ok_or_else(|| Error::Parse(format!("unclosed cycle in {text:?}")))?;
        let inner = &body[..close];
        if !inner.is_empty() {
            let points = inner
                .split(',')
                .map(|s| {
                    s.parse::<usize>()
                        .ok()
                        .filter(|&p| p > 0)
                        .ok_or_else(|| Error::Parse(format!("bad point {s:?} in {text:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            cycles.push(points);
        }
        rest = &body[close + 1..];
    }
    Ok(cycles)
}

impl fmt::Display for Permutation {
    /// Cycle notation without fixed points; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            let parts: Vec<String> = cycle.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", parts.join(","))?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}[{}]", self.degree())
    }
}

/// Parses `<cycles>` or `<cycles>@<degree>`; the latter keeps trailing fixed points.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('@') {
            Some((cycles, degree)) => {
                let degree = degree
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad degree in {s:?}")))?;
                Permutation::parse(cycles, Some(degree))
            }
            None => Permutation::parse(s, None),
        }
    }
}

impl TryFrom<String> for Permutation {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Permutation> for String {
    fn from(p: Permutation) -> String {
        format!("{p}@{}", p.degree())
    }
}
