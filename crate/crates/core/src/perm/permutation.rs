use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// A permutation of `{0, .., degree-1}` stored as its image list.
///
/// Products are read left to right: `(a * b).apply(i) == b.apply(a.apply(i))`,
/// so groups act on the right and `x^g = g⁻¹ x g`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u32]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image list, rejecting non-bijections.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (i, &p) in images.iter().enumerate() {
            let p = p as usize;
            if p >= n {
                return Err(Error::MalformedPermutation(format!(
                    "image {p} of point {i} is outside 0..{n}"
                )));
            }
            if seen[p] {
                return Err(Error::MalformedPermutation(format!(
                    "point {p} is hit twice"
                )));
            }
            seen[p] = true;
        }
        Ok(Self {
            images: images.into_boxed_slice(),
        })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Self {
            images: images.into_boxed_slice(),
        }
    }

    /// Parses disjoint-cycle notation such as `"(0 1 2)(3 4)"`; `"()"` is the identity.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        let mut rest = text.trim();
        if rest.is_empty() {
            return Err(Error::Parse(
                "empty string (use \"()\" for the identity)".into(),
            ));
        }
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('(') else {
                return Err(Error::Parse(format!("expected '(' in {text:?}")));
            };
            let Some(close) = body.find(')') else {
                return Err(Error::Parse(format!("unclosed cycle in {text:?}")));
            };
            let inner = &body[..close];
            if inner.contains('(') {
                return Err(Error::Parse(format!("nested '(' in {text:?}")));
            }
            let mut cycle = Vec::new();
            for tok in inner.split(|c: char| c.is_whitespace() || c == ',') {
                if tok.is_empty() {
                    continue;
                }
                let p: usize = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad point {tok:?} in {text:?}")))?;
                if p >= degree {
                    return Err(Error::Parse(format!(
                        "point {p} out of range for degree {degree}"
                    )));
                }
                if used[p] {
                    return Err(Error::Parse(format!(
                        "point {p} repeated across cycles in {text:?}"
                    )));
                }
                used[p] = true;
                cycle.push(p);
            }
            for w in 0..cycle.len() {
                images[cycle[w]] = cycle[(w + 1) % cycle.len()] as u32;
            }
            rest = body[close + 1..].trim_start();
        }
        Ok(Self {
            images: images.into_boxed_slice(),
        })
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i as u32 == p)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &p) in self.images.iter().enumerate() {
            inv[p as usize] = i as u32;
        }
        Self {
            images: inv.into_boxed_slice(),
        }
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Self {
            images: self
                .images
                .iter()
                .map(|&p| other.images[p as usize])
                .collect(),
        }
    }

    /// `g⁻¹ self g`.
    pub fn conjugate_by(&self, g: &Self) -> Self {
        let mut out = vec![0u32; self.images.len()];
        for (i, &p) in self.images.iter().enumerate() {
            out[g.images[i] as usize] = g.images[p as usize];
        }
        Self {
            images: out.into_boxed_slice(),
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        acc
    }

    pub fn smallest_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &p)| *i as u32 != p)
            .map(|(i, _)| i)
    }

    /// Nontrivial cycles, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.apply(start);
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            out.push(cycle);
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    /// Restricts to the points `offset..offset+len`, which must be an invariant block.
    pub fn restrict_block(&self, offset: usize, len: usize) -> Self {
        Self {
            images: (offset..offset + len)
                .map(|i| self.images[i] - offset as u32)
                .collect(),
        }
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.then(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (i, p) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let p = Permutation::parse("(0 1 2)(3 4)", 6).unwrap();
        assert_eq!(p.images(), &[1, 2, 0, 4, 3, 5]);
        assert_eq!(p.to_string(), "(0 1 2)(3 4)");
        assert_eq!(
            Permutation::parse("()", 3).unwrap(),
            Permutation::identity(3)
        );
        assert_eq!(Permutation::identity(4).to_string(), "()");
    }

    #[test]
    fn parse_rejects_repeated_points() {
        let err = Permutation::parse("(0 1)(1 2)", 3).unwrap_err();
        assert!(matches!(err, Error::Parse(m) if m.contains("repeated")));
        assert!(Permutation::parse("(0 0)", 3).is_err());
        assert!(Permutation::parse("(0 5)", 3).is_err());
        assert!(Permutation::parse("(0 1", 3).is_err());
        assert!(Permutation::parse("", 3).is_err());
    }

    #[test]
    fn from_images_rejects_non_bijection() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
        assert!(Permutation::from_images(vec![2, 0, 1]).is_ok());
    }

    #[test]
    fn product_is_left_to_right() {
        let a = Permutation::parse("(0 1)", 3).unwrap();
        let b = Permutation::parse("(1 2)", 3).unwrap();
        // 0 -a-> 1 -b-> 2
        assert_eq!((&a * &b).apply(0), 2);
        assert_eq!((&a * &b).to_string(), "(0 2 1)");
    }

    #[test]
    fn conjugation_matches_product() {
        let x = Permutation::parse("(0 1 2 3)", 5).unwrap();
        let g = Permutation::parse("(1 4)(0 2)", 5).unwrap();
        let direct = g.inverse().then(&x).then(&g);
        assert_eq!(x.conjugate_by(&g), direct);
    }

    #[test]
    fn order_and_pow() {
        let p = Permutation::parse("(0 1 2)(3 4)", 5).unwrap();
        assert_eq!(p.order(), 6);
        assert!(p.pow(6).is_identity());
        assert!(!p.pow(3).is_identity());
        assert_eq!(p.pow(5), p.inverse());
    }
}
