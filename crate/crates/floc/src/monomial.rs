//! Monomial combinatorics: the ambient ring, monomial ideals, powers,
//! minimal primes and height.

use std::fmt;
use std::sync::Arc;

use crate::degree::Multidegree;
use crate::error::{Error, Result};
use crate::field::FieldSpec;

/// The ambient polynomial ring k[x_1..x_n], finely graded by Z^n with
/// deg x_i = e_i.  The graded maximal ideal is (x_1, ..., x_n).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingSpec {
    pub num_vars: usize,
    pub field: FieldSpec,
    pub var_names: Vec<String>,
}

impl RingSpec {
    pub fn new(num_vars: usize, field: FieldSpec) -> Arc<Self> {
        assert!(num_vars >= 1, "need at least one variable");
        let var_names = default_var_names(num_vars);
        Arc::new(RingSpec {
            num_vars,
            field,
            var_names,
        })
    }

    pub fn with_names(names: Vec<String>, field: FieldSpec) -> Arc<Self> {
        assert!(!names.is_empty());
        Arc::new(RingSpec {
            num_vars: names.len(),
            field,
            var_names: names,
        })
    }

    /// The graded maximal ideal (x_1, ..., x_n).
    pub fn maximal_ideal(self: &Arc<Self>) -> MonomialIdeal {
        let n = self.num_vars;
        let gens = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                Multidegree(v)
            })
            .collect();
        MonomialIdeal::new(self.clone(), gens)
    }

    pub fn variable(self: &Arc<Self>, i: usize) -> Multidegree {
        let mut v = vec![0; self.num_vars];
        v[i] = 1;
        Multidegree(v)
    }

    pub fn format_monomial(&self, e: &Multidegree) -> String {
        let mut parts = Vec::new();
        for (i, &a) in e.0.iter().enumerate() {
            match a {
                0 => {}
                1 => parts.push(self.var_names[i].clone()),
                _ => parts.push(format!("{}^{}", self.var_names[i], a)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

fn default_var_names(n: usize) -> Vec<String> {
    if n <= 3 {
        ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    }
}

/// A monomial ideal held by its minimal generators (exponent vectors).
/// The empty generator set is the zero ideal.
#[derive(Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    pub ring: Arc<RingSpec>,
    gens: Vec<Multidegree>,
}

impl MonomialIdeal {
    /// Build from arbitrary generators; divisible ones are dropped.
    pub fn new(ring: Arc<RingSpec>, gens: Vec<Multidegree>) -> Self {
        for g in &gens {
            assert_eq!(g.len(), ring.num_vars);
            assert!(g.is_nonnegative(), "ideal generators need exponents >= 0");
        }
        let gens = minimalize(gens);
        MonomialIdeal { ring, gens }
    }

    pub fn zero(ring: Arc<RingSpec>) -> Self {
        MonomialIdeal { ring, gens: vec![] }
    }

    pub fn generators(&self) -> &[Multidegree] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.0.iter().all(|&a| a == 0))
    }

    /// Does x^e lie in the ideal extended to the localization inverting the
    /// variables of `inverted`?  Membership only constrains the
    /// non-inverted coordinates.
    pub fn contains_in_localization(&self, e: &Multidegree, inverted: u32) -> bool {
        self.gens.iter().any(|g| e.geq_off(g, inverted))
    }

    pub fn contains(&self, e: &Multidegree) -> bool {
        self.contains_in_localization(e, 0)
    }

    /// Minimal generators of the t-th power.
    pub fn power(&self, t: usize) -> MonomialIdeal {
        assert!(t >= 1, "power needs t >= 1");
        if self.is_zero() {
            return self.clone();
        }
        let mut cur: Vec<Multidegree> = self.gens.clone();
        for _ in 1..t {
            let mut next = Vec::new();
            for a in &cur {
                for g in &self.gens {
                    next.push(a + g);
                }
            }
            cur = minimalize(next);
        }
        MonomialIdeal {
            ring: self.ring.clone(),
            gens: cur,
        }
    }

    /// Minimal monomial primes over the ideal, each given as a bitmask of
    /// variables: these are the minimal vertex covers of the generator
    /// supports.
    pub fn minimal_primes(&self) -> Vec<u32> {
        assert!(!self.is_zero(), "the zero ideal has no minimal primes here");
        let n = self.ring.num_vars;
        let supports: Vec<u32> = self.gens.iter().map(|g| g.support()).collect();
        let mut covers: Vec<u32> = Vec::new();
        for mask in 0..(1u32 << n) {
            if supports.iter().all(|s| s & mask != 0) {
                covers.push(mask);
            }
        }
        minimal_masks(covers)
    }

    /// Height: the minimum number of variables in a minimal prime.
    pub fn height(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal("height".into()));
        }
        if self.is_unit() {
            return Err(Error::UnitIdeal("height".into()));
        }
        Ok(self
            .minimal_primes()
            .iter()
            .map(|m| m.count_ones() as usize)
            .min()
            .unwrap())
    }

    /// Union of the variable supports of all generators.
    pub fn support_vars(&self) -> u32 {
        self.gens.iter().fold(0, |acc, g| acc | g.support())
    }

    /// Largest total degree among the minimal generators (0 for the zero
    /// ideal); feeds the box-margin policy.
    pub fn max_gen_total_degree(&self) -> i64 {
        self.gens.iter().map(|g| g.total()).max().unwrap_or(0)
    }

    /// Do the generators form a regular sequence?  For monomials this holds
    /// exactly when the supports are pairwise disjoint.
    pub fn gens_are_regular_sequence(&self) -> bool {
        let supports: Vec<u32> = self.gens.iter().map(|g| g.support()).collect();
        for i in 0..supports.len() {
            for j in i + 1..supports.len() {
                if supports[i] & supports[j] != 0 {
                    return false;
                }
            }
        }
        !self.gens.is_empty()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", self.ring.format_monomial(g))?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn minimalize(gens: Vec<Multidegree>) -> Vec<Multidegree> {
    let mut out: Vec<Multidegree> = Vec::new();
    let mut sorted = gens;
    sorted.sort();
    sorted.dedup();
    for g in sorted {
        if out.iter().any(|h| g.geq(h)) {
            continue;
        }
        out.retain(|h| !h.geq(&g));
        out.push(g);
    }
    out.sort();
    out
}

fn minimal_masks(masks: Vec<u32>) -> Vec<u32> {
    let mut out: Vec<u32> = Vec::new();
    let mut sorted = masks;
    sorted.sort_by_key(|m| m.count_ones());
    for m in sorted {
        if out.iter().any(|&p| p & m == p) {
            continue;
        }
        out.push(m);
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring2() -> Arc<RingSpec> {
        RingSpec::new(2, FieldSpec::rationals())
    }

    fn md(v: Vec<i64>) -> Multidegree {
        Multidegree(v)
    }

    #[test]
    fn principal_power() {
        let r = RingSpec::new(1, FieldSpec::rationals());
        let a = MonomialIdeal::new(r, vec![md(vec![1])]);
        let a3 = a.power(3);
        assert_eq!(a3.generators(), &[md(vec![3])]);
    }

    #[test]
    fn square_of_maximal() {
        let r = ring2();
        let m = r.maximal_ideal();
        let m2 = m.power(2);
        assert_eq!(
            m2.generators(),
            &[md(vec![0, 2]), md(vec![1, 1]), md(vec![2, 0])]
        );
    }

    #[test]
    fn zero_power() {
        let r = ring2();
        let z = MonomialIdeal::zero(r);
        assert!(z.power(4).is_zero());
    }

    #[test]
    fn power_one_is_identity() {
        let r = ring2();
        let a = MonomialIdeal::new(r, vec![md(vec![2, 0]), md(vec![1, 1])]);
        assert_eq!(a.power(1), a);
    }

    #[test]
    fn minimalization() {
        let r = ring2();
        let a = MonomialIdeal::new(r, vec![md(vec![1, 0]), md(vec![2, 0]), md(vec![1, 1])]);
        // x divides x^2 and x*y
        assert_eq!(a.generators(), &[md(vec![1, 0])]);
    }

    #[test]
    fn heights() {
        let r = ring2();
        let x = MonomialIdeal::new(r.clone(), vec![md(vec![1, 0])]);
        assert_eq!(x.height().unwrap(), 1);
        let m = r.maximal_ideal();
        assert_eq!(m.height().unwrap(), 2);
        let xy = MonomialIdeal::new(r.clone(), vec![md(vec![1, 1])]);
        // minimal primes of (xy) are (x) and (y)
        assert_eq!(xy.height().unwrap(), 1);
        assert_eq!(xy.minimal_primes(), vec![0b01, 0b10]);
        assert!(MonomialIdeal::zero(r).height().is_err());
    }

    #[test]
    fn power_products_generate_consistently() {
        let r = ring2();
        let a = MonomialIdeal::new(r, vec![md(vec![2, 0]), md(vec![1, 1])]);
        let s = a.power(2);
        let t = a.power(3);
        // a^2 * a^3 generates a^5: every product of generators is in a^5 and
        // every generator of a^5 is a product
        let five = a.power(5);
        for g2 in s.generators() {
            for g3 in t.generators() {
                assert!(five.contains(&(g2 + g3)));
            }
        }
        for g in five.generators() {
            assert!(s
                .generators()
                .iter()
                .any(|g2| g.geq(g2) && t.contains(&(g - g2))));
        }
    }

    #[test]
    fn regular_sequences() {
        let r = ring2();
        let m = r.maximal_ideal();
        assert!(m.gens_are_regular_sequence());
        let a = MonomialIdeal::new(r.clone(), vec![md(vec![2, 0]), md(vec![1, 1])]);
        assert!(!a.gens_are_regular_sequence());
        let xy = MonomialIdeal::new(r, vec![md(vec![1, 1])]);
        assert!(xy.gens_are_regular_sequence());
    }
}
