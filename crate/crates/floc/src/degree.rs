//! Fine grading bookkeeping: points and boxes in Z^n.

use std::fmt;
use std::ops::{Add, Sub};

/// A point of Z^n, the fine grading group of the polynomial ring.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multidegree(pub Vec<i64>);

impl Multidegree {
    pub fn zero(n: usize) -> Self {
        Multidegree(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Componentwise `self >= other`.
    pub fn geq(&self, other: &Multidegree) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    /// `self >= other` on the coordinates *not* in `skip` (a bitmask).
    pub fn geq_off(&self, other: &Multidegree, skip: u32) -> bool {
        self.0
            .iter()
            .zip(&other.0)
            .enumerate()
            .all(|(i, (a, b))| skip & (1 << i) != 0 || a >= b)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&a| a >= 0)
    }

    /// Componentwise maximum (the join; for exponent vectors this is the lcm).
    pub fn join(&self, other: &Multidegree) -> Multidegree {
        Multidegree(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn max_abs(&self) -> i64 {
        self.0.iter().map(|a| a.abs()).max().unwrap_or(0)
    }

    pub fn negated(&self) -> Multidegree {
        Multidegree(self.0.iter().map(|a| -a).collect())
    }

    /// Bitmask of coordinates with a nonzero entry.
    pub fn support(&self) -> u32 {
        let mut s = 0;
        for (i, &a) in self.0.iter().enumerate() {
            if a != 0 {
                s |= 1 << i;
            }
        }
        s
    }
}

impl Add<&Multidegree> for &Multidegree {
    type Output = Multidegree;
    fn add(self, rhs: &Multidegree) -> Multidegree {
        Multidegree(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&Multidegree> for &Multidegree {
    type Output = Multidegree;
    fn sub(self, rhs: &Multidegree) -> Multidegree {
        Multidegree(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A closed integer box in Z^n: the finite window on which complexes are
/// realized degree by degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DegreeBox {
    pub lo: Multidegree,
    pub hi: Multidegree,
}

impl DegreeBox {
    pub fn new(lo: Multidegree, hi: Multidegree) -> Self {
        assert_eq!(lo.len(), hi.len());
        assert!(hi.geq(&lo), "empty degree box");
        DegreeBox { lo, hi }
    }

    /// The cube [-r, r]^n.
    pub fn symmetric(n: usize, r: i64) -> Self {
        DegreeBox {
            lo: Multidegree(vec![-r; n]),
            hi: Multidegree(vec![r; n]),
        }
    }

    pub fn dims(&self) -> usize {
        self.lo.len()
    }

    pub fn contains(&self, d: &Multidegree) -> bool {
        d.geq(&self.lo) && self.hi.geq(d)
    }

    /// Grow by `m` in every direction.
    pub fn enlarged(&self, m: i64) -> DegreeBox {
        DegreeBox {
            lo: Multidegree(self.lo.0.iter().map(|a| a - m).collect()),
            hi: Multidegree(self.hi.0.iter().map(|a| a + m).collect()),
        }
    }

    pub fn max_abs(&self) -> i64 {
        self.lo.max_abs().max(self.hi.max_abs())
    }

    pub fn cell_count(&self) -> usize {
        self.lo
            .0
            .iter()
            .zip(&self.hi.0)
            .map(|(a, b)| (b - a + 1) as usize)
            .product()
    }

    /// Lexicographic iteration over all lattice points of the box.
    pub fn iter(&self) -> impl Iterator<Item = Multidegree> + '_ {
        let n = self.dims();
        let mut cur = self.lo.0.clone();
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = Multidegree(cur.clone());
            // advance odometer, last coordinate fastest
            let mut i = n;
            loop {
                if i == 0 {
                    done = true;
                    break;
                }
                i -= 1;
                if cur[i] < self.hi.0[i] {
                    cur[i] += 1;
                    for j in i + 1..n {
                        cur[j] = self.lo.0[j];
                    }
                    break;
                }
            }
            Some(out)
        })
    }
}

impl fmt::Display for DegreeBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dims() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "[{},{}]", self.lo.0[i], self.hi.0[i])?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn box_iteration_is_lexicographic_and_complete() {
        let b = DegreeBox::new(Multidegree(vec![-1, 0]), Multidegree(vec![1, 1]));
        let cells: Vec<_> = b.iter().collect();
        assert_eq!(cells.len(), b.cell_count());
        let mut sorted = cells.clone();
        sorted.sort();
        assert_eq!(cells, sorted);
        assert!(cells.contains(&Multidegree(vec![0, 1])));
    }

    #[test]
    fn join_and_order() {
        let a = Multidegree(vec![2, 0]);
        let b = Multidegree(vec![1, 3]);
        assert_eq!(a.join(&b), Multidegree(vec![2, 3]));
        assert!(!a.geq(&b));
        assert!(a.geq_off(&b, 0b10));
    }
}
