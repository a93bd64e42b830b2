//! Injective partial self-maps of `{1..n}`, written `(a_1,…,a_n)` with `0`
//! marking points outside the domain.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// A partial bijection of `{1..degree}`; `image[i-1]` is the image of `i`,
/// or `0` when `i` is not in the domain.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartialBijection {
    image: Vec<u32>,
}

impl PartialBijection {
    /// Validates range and injectivity.
    pub fn new(image: Vec<u32>) -> Result<Self> {
        let n = image.len();
        if n == 0 {
            return Err(Error::Input("degree must be positive".into()));
        }
        let mut seen = vec![false; n + 1];
        for (i, &a) in image.iter().enumerate() {
            if a as usize > n {
                return Err(Error::Input(format!("entry {a} at position {} is outside 0..={n}", i + 1)));
            }
            if a != 0 {
                if seen[a as usize] {
                    return Err(Error::Input(format!("duplicate image {a}")));
                }
                seen[a as usize] = true;
            }
        }
        Ok(PartialBijection { image })
    }

    pub fn identity(degree: usize) -> Self {
        PartialBijection { image: (1..=degree as u32).collect() }
    }

    pub fn empty(degree: usize) -> Self {
        PartialBijection { image: vec![0; degree] }
    }

    /// The identity map on a subset of `{1..degree}`.
    pub fn idempotent_on(degree: usize, points: &[u32]) -> Result<Self> {
        let mut image = vec![0; degree];
        for &p in points {
            if p == 0 || p as usize > degree {
                return Err(Error::Input(format!("point {p} outside 1..={degree}")));
            }
            image[p as usize - 1] = p;
        }
        Ok(PartialBijection { image })
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[u32] {
        &self.image
    }

    /// `self(x)` for `x` in `1..=degree`.
    pub fn apply(&self, x: u32) -> Option<u32> {
        match self.image.get((x as usize).wrapping_sub(1)) {
            Some(&0) | None => None,
            Some(&y) => Some(y),
        }
    }

    pub fn domain(&self) -> Vec<u32> {
        (1..=self.degree() as u32).filter(|&i| self.image[i as usize - 1] != 0).collect()
    }

    pub fn range(&self) -> Vec<u32> {
        let mut r: Vec<u32> = self.image.iter().copied().filter(|&a| a != 0).collect();
        r.sort_unstable();
        r
    }

    /// `(self·g)(x) = self(g(x))`: the right factor acts first.
    pub fn compose(&self, g: &PartialBijection) -> Result<Self> {
        if self.degree() != g.degree() {
            return Err(Error::DegreeMismatch(self.degree(), g.degree()));
        }
        Ok(self.compose_unchecked(g))
    }

    pub(crate) fn compose_unchecked(&self, g: &PartialBijection) -> Self {
        PartialBijection {
            image: g.image.iter().map(|&y| if y == 0 { 0 } else { self.image[y as usize - 1] }).collect(),
        }
    }

    /// The inverse partial bijection.
    pub fn star(&self) -> Self {
        let mut image = vec![0; self.degree()];
        for (i, &a) in self.image.iter().enumerate() {
            if a != 0 {
                image[a as usize - 1] = i as u32 + 1;
            }
        }
        PartialBijection { image }
    }

    pub fn is_idempotent(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &a)| a == 0 || a as usize == i + 1)
    }

    /// `self ≤ g` in the natural order: `self` is a restriction of `g`.
    pub fn natural_leq(&self, g: &PartialBijection) -> Result<bool> {
        if self.degree() != g.degree() {
            return Err(Error::DegreeMismatch(self.degree(), g.degree()));
        }
        Ok(self.image.iter().zip(&g.image).all(|(&a, &b)| a == 0 || a == b))
    }
}

impl fmt::Display for PartialBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, a) in self.image.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for PartialBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for PartialBijection {
    type Err = Error;

    /// Parses `(a_1,…,a_n)`; the parentheses are optional.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t.strip_prefix('(').unwrap_or(t);
        let t = t.strip_suffix(')').unwrap_or(t);
        let mut image = Vec::new();
        for part in t.split(',') {
            let part = part.trim();
            let v: u32 = part.parse().map_err(|_| Error::Input(format!("bad entry {part:?} in {s:?}")))?;
            image.push(v);
        }
        PartialBijection::new(image)
    }
}

/// Parses a tuple, for callers that prefer a function to `str::parse`.
pub fn parse(s: &str) -> Result<PartialBijection> {
    s.parse()
}

/// Formats a tuple in `(a_1,…,a_n)` notation.
pub fn format(f: &PartialBijection) -> String {
    format!("{f}")
}
