use std::fmt;

use crate::error::{Error, Result};

/// A bijection of the points `1..=degree`.
///
/// Images are stored zero-based, so the derived ordering is the
/// lexicographic order on image sequences and the identity sorts first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u16]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        Ok(Self::identity_unchecked(degree))
    }

    pub(crate) fn identity_unchecked(degree: usize) -> Self {
        Self {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from one-based images: `images[i - 1]` is the image of `i`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let degree = images.len();
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        let mut seen = vec![false; degree];
        let mut out = Vec::with_capacity(degree);
        for &img in images {
            if img == 0 || img > degree {
                return Err(Error::PointOutOfRange { point: img, degree });
            }
            if std::mem::replace(&mut seen[img - 1], true) {
                return Err(Error::NotBijective(degree));
            }
            out.push((img - 1) as u16);
        }
        Ok(Self {
            images: out.into_boxed_slice(),
        })
    }

    /// Builds a permutation from disjoint cycles over one-based points.
    /// Points that appear in no cycle are fixed.
    pub fn from_cycles<C: AsRef<[usize]>>(cycles: &[C], degree: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        let mut images: Vec<u16> = (0..degree as u16).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for &p in cycle {
                if p == 0 || p > degree {
                    return Err(Error::PointOutOfRange { point: p, degree });
                }
                if std::mem::replace(&mut seen[p - 1], true) {
                    return Err(Error::RepeatedPoint(p));
                }
            }
            for (i, &p) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                images[p - 1] = (next - 1) as u16;
            }
        }
        Ok(Self {
            images: images.into_boxed_slice(),
        })
    }

    /// Parses cycle notation such as `"(1 2 3)(4 5 6)"`; `"()"` is the identity.
    ///
    /// Points are separated by whitespace or commas. For degree below 10 a
    /// cycle written without separators, like `(142536)`, is read digit by digit.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body_start = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' at {rest:?}")))?;
            let close = body_start
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {text:?}")))?;
            let body = body_start[..close].trim();
            rest = body_start[close + 1..].trim_start();
            if body.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .collect();
            let points: Vec<usize> = if tokens.len() == 1 && tokens[0].len() > 1 && degree < 10 {
                tokens[0]
                    .chars()
                    .map(|c| {
                        c.to_digit(10)
                            .map(|d| d as usize)
                            .ok_or_else(|| Error::Parse(format!("bad point {c:?}")))
                    })
                    .collect::<Result<_>>()?
            } else {
                tokens
                    .iter()
                    .map(|t| {
                        t.parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad point {t:?}")))
                    })
                    .collect::<Result<_>>()?
            };
            cycles.push(points);
        }
        Self::from_cycles(&cycles, degree)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the one-based `point`.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point - 1] as usize + 1
    }

    /// One-based image sequence.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize + 1).collect()
    }

    #[inline]
    pub(crate) fn raw(&self) -> &[u16] {
        &self.images
    }

    #[inline]
    pub(crate) fn images_mut(&mut self) -> &mut [u16] {
        &mut self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &v)| i == v as usize)
    }

    /// `self ∘ other`: `other` is applied first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    #[inline]
    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        Self {
            images: other
                .images
                .iter()
                .map(|&i| self.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u16; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u16;
        }
        Self {
            images: inv.into_boxed_slice(),
        }
    }

    /// `c ∘ self ∘ c⁻¹`.
    pub fn conjugate_by(&self, c: &Self) -> Result<Self> {
        c.compose(self)?.compose(&c.inverse())
    }

    /// Nontrivial cycles as one-based points, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.images[p] as usize;
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Cycle lengths in non-increasing order; fixed points count as 1-cycles.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut lens = Vec::new();
        for start in 0..self.degree() {
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                len += 1;
                p = self.images[p] as usize;
            }
            if len > 0 {
                lens.push(len);
            }
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    pub fn order(&self) -> usize {
        self.cycle_type().into_iter().fold(1, lcm)
    }

    pub fn is_transposition(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &v)| i != v as usize)
            .count()
            == 2
    }

    /// Relabels points: the result maps `pi(x)` to `pi(self(x))`.
    pub fn relabel(&self, pi: &Self) -> Result<Self> {
        self.conjugate_by(pi)
    }
}

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, p) in cycle.iter().enumerate() {
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
        write!(f, "{self}[{}]", self.degree())
    }
}
