//! Formal linear combinations of data: composition, tensor product,
//! dualities and equality.

use std::fmt;

use crate::error::{Result, SwbError};
use crate::swb::{
    cap_n, cup_n, hs_equivalent, identity, insert_left_n, insert_right_n, invariants, isotopy_reduce, juxtapose,
    mobius_gen, torus_gen, Equivalence, Invariants, SearchLimits, SwbDatum,
};

use super::scalar::Scalar;

/// Internal components removed by [`normalize_homogeneous`], by kind.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct LoopCounts {
    /// Separating loops, worth α each.
    pub separating: u32,
    /// One-sided loops, worth β each.
    pub twisted: u32,
    /// Two-sided loops that do not separate, worth γ each.
    pub nonseparating: u32,
}

impl LoopCounts {
    pub fn scalar(&self) -> Scalar {
        Scalar::loops(self.separating, self.twisted, self.nonseparating)
    }
}

/// Deletes every internal component, smallest first, and reduces what is
/// left to its turn-back-free form.
pub fn normalize_homogeneous(th: &SwbDatum) -> (LoopCounts, SwbDatum) {
    let mut counts = LoopCounts::default();
    let mut cur = th.clone();
    loop {
        let mut internal: Vec<_> = cur.component_infos().into_iter().filter(|c| c.is_internal()).collect();
        if internal.is_empty() {
            break;
        }
        internal.sort_by_key(|c| (c.vertices.len(), c.vertices.clone()));
        let c = &internal[0];
        if c.twist {
            counts.twisted += 1;
        } else if c.separating {
            counts.separating += 1;
        } else {
            counts.nonseparating += 1;
        }
        let comp = crate::swb::Component { vertices: c.vertices.clone() };
        cur = cur.delete(&comp).expect("component of this datum");
    }
    let reduced = isotopy_reduce(&cur).expect("internal components were removed");
    (counts, reduced)
}

/// Result of comparing two morphisms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Comparison {
    Equal,
    Different,
    /// Some pair of terms could not be told apart within the search limits.
    Undecided,
}

/// A morphism `domain → codomain`: a sum of reduced data without internal
/// components, each with a polynomial coefficient.
#[derive(Clone)]
pub struct Morphism {
    domain: usize,
    codomain: usize,
    terms: Vec<(SwbDatum, Scalar)>,
    limits: SearchLimits,
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Morphism({} -> {}", self.domain, self.codomain)?;
        for (th, c) in &self.terms {
            write!(f, "; ({c}) {th:?}")?;
        }
        write!(f, ")")
    }
}

impl Morphism {
    pub fn zero(domain: usize, codomain: usize) -> Self {
        Morphism { domain, codomain, terms: Vec::new(), limits: SearchLimits::new(4) }
    }

    /// The homogeneous morphism of a datum.
    pub fn from_datum(th: &SwbDatum) -> Self {
        let mut m = Self::zero(th.south(), th.north());
        m.add_datum(th, &Scalar::one());
        m
    }

    /// Search limits used when merging terms that are not identical.
    pub fn with_limits(mut self, limits: SearchLimits) -> Self {
        self.limits = limits;
        self
    }

    pub fn limits(&self) -> SearchLimits {
        self.limits
    }

    pub fn domain(&self) -> usize {
        self.domain
    }

    pub fn codomain(&self) -> usize {
        self.codomain
    }

    pub fn terms(&self) -> &[(SwbDatum, Scalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scaled(&self, c: &Scalar) -> Morphism {
        let mut out = Self::zero(self.domain, self.codomain).with_limits(self.limits);
        for (th, k) in &self.terms {
            out.add_reduced(th.clone(), &(k * c));
        }
        out
    }

    /// Adds `coeff · th` after normalizing `th`.
    pub fn add_datum(&mut self, th: &SwbDatum, coeff: &Scalar) {
        let (loops, rep) = normalize_homogeneous(th);
        self.add_reduced(rep, &(coeff * &loops.scalar()));
    }

    /// Adds a term already in normal form, merging with an identical or
    /// provably equivalent term.
    fn add_reduced(&mut self, th: SwbDatum, coeff: &Scalar) {
        if coeff.is_zero() {
            return;
        }
        let pos = self.terms.iter().position(|(t, _)| *t == th).or_else(|| {
            let inv = invariants(&th);
            self.terms.iter().position(|(t, _)| same_class(t, &th, &inv, self.limits) == Some(true))
        });
        match pos {
            Some(k) => {
                let sum = &self.terms[k].1 + coeff;
                if sum.is_zero() {
                    self.terms.remove(k);
                } else {
                    self.terms[k].1 = sum;
                }
            }
            None => self.terms.push((th, coeff.clone())),
        }
    }

    pub fn add(&self, other: &Morphism) -> Result<Morphism> {
        self.check_same_type(other)?;
        let mut out = self.clone();
        for (th, c) in &other.terms {
            out.add_reduced(th.clone(), c);
        }
        Ok(out)
    }

    fn check_same_type(&self, other: &Morphism) -> Result<()> {
        if (self.domain, self.codomain) != (other.domain, other.codomain) {
            return Err(SwbError::ArityMismatch { expected: self.domain, found: other.domain });
        }
        Ok(())
    }

    /// `self ∘ f`: first `f`, then `self`.
    pub fn compose(&self, f: &Morphism) -> Result<Morphism> {
        if f.codomain != self.domain {
            return Err(SwbError::ArityMismatch { expected: self.domain, found: f.codomain });
        }
        let mut out = Self::zero(f.domain, self.codomain).with_limits(self.limits);
        for (lower, a) in &f.terms {
            for (upper, b) in &self.terms {
                let (th, linking) = juxtapose(upper, lower)?;
                out.add_datum(&th, &(&(a * b) * &Scalar::alpha_pow(linking as u32)));
            }
        }
        Ok(out)
    }

    /// `self ⊗ g`, with `self` on the left.
    pub fn tensor(&self, g: &Morphism) -> Morphism {
        let mut out = Self::zero(self.domain + g.domain, self.codomain + g.codomain).with_limits(self.limits);
        for (th1, a) in &self.terms {
            for (th2, b) in &g.terms {
                // (f ⊗ id) ∘ (id ⊗ g)
                let right = insert_left_n(th2, th1.south());
                let left = insert_right_n(th1, th2.north());
                let (th, linking) = juxtapose(&left, &right).expect("arities agree");
                out.add_datum(&th, &(&(a * b) * &Scalar::alpha_pow(linking as u32)));
            }
        }
        out
    }

    /// Vertical mirror image, termwise.
    pub fn star(&self) -> Morphism {
        let mut out = Self::zero(self.codomain, self.domain).with_limits(self.limits);
        for (th, c) in &self.terms {
            out.add_reduced(th.star(), c);
        }
        out
    }

    /// The dual built from evaluation and coevaluation:
    /// `(ev_m ⊗ id_n) ∘ (id_m ⊗ f ⊗ id_n) ∘ (id_m ⊗ coev_n)`.
    pub fn dagger(&self) -> Morphism {
        let (n, m) = (self.domain, self.codomain);
        let lim = self.limits;
        let id = |k| id(k).with_limits(lim);
        let lower = id(m).tensor(&coev(n).with_limits(lim));
        let middle = id(m).tensor(self).tensor(&id(n));
        let upper = ev(m).with_limits(lim).tensor(&id(n));
        upper.compose(&middle).and_then(|x| x.compose(&lower)).expect("arities agree")
    }

    /// The covariant reflection `(f†)*`.
    pub fn functor_r(&self) -> Morphism {
        self.dagger().star()
    }

    /// Equality in the quotient: coefficients must agree on every class.
    pub fn equals(&self, other: &Morphism) -> Result<Comparison> {
        self.check_same_type(other)?;
        let lim = self.limits;
        let mut all: Vec<(SwbDatum, Scalar)> = self.terms.clone();
        all.extend(other.terms.iter().map(|(t, c)| (t.clone(), -c)));
        let invs: Vec<Invariants> = all.iter().map(|(t, _)| invariants(t)).collect();

        // group terms into classes; `unsure` marks classes whose
        // membership could not be settled
        let mut classes: Vec<(Vec<usize>, Scalar)> = Vec::new();
        let mut unsure_pairs = false;
        for k in 0..all.len() {
            let mut placed = false;
            for (members, sum) in classes.iter_mut() {
                let rep = members[0];
                match same_class(&all[rep].0, &all[k].0, &invs[k], lim) {
                    Some(true) => {
                        members.push(k);
                        *sum = &*sum + &all[k].1;
                        placed = true;
                        break;
                    }
                    None => unsure_pairs = true,
                    _ => {}
                }
            }
            if !placed {
                classes.push((vec![k], all[k].1.clone()));
            }
        }
        if classes.iter().all(|(_, s)| s.is_zero()) {
            Ok(Comparison::Equal)
        } else if unsure_pairs {
            Ok(Comparison::Undecided)
        } else {
            Ok(Comparison::Different)
        }
    }
}

/// Whether two reduced data are handle-slide equivalent: `Some(true)`,
/// `Some(false)` when ruled out, `None` when the search ran out.
fn same_class(a: &SwbDatum, b: &SwbDatum, inv_b: &Invariants, limits: SearchLimits) -> Option<bool> {
    if a == b {
        return Some(true);
    }
    if a.rank() != b.rank() || invariants(a) != *inv_b {
        return Some(false);
    }
    match hs_equivalent(a, b, limits) {
        Ok(Equivalence::Equivalent { .. }) => Some(true),
        Ok(Equivalence::Distinct { .. }) | Err(_) => Some(false),
        Ok(Equivalence::Undecided { .. }) => None,
    }
}

pub fn id(n: usize) -> Morphism {
    Morphism::from_datum(&identity(n))
}

/// Evaluation `2n → 0`.
pub fn ev(n: usize) -> Morphism {
    Morphism::from_datum(&cap_n(n))
}

/// Coevaluation `0 → 2n`.
pub fn coev(n: usize) -> Morphism {
    Morphism::from_datum(&cup_n(n))
}

pub fn torus(l: usize, m: usize) -> Morphism {
    Morphism::from_datum(&torus_gen(l, m))
}

pub fn mobius(n: usize) -> Morphism {
    Morphism::from_datum(&mobius_gen(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluation_after_coevaluation_is_loops() {
        for n in 0..4 {
            let m = ev(n).compose(&coev(n)).unwrap();
            assert_eq!(m.terms().len(), 1);
            assert_eq!(m.terms()[0].1, Scalar::alpha_pow(n as u32));
            assert_eq!(m.terms()[0].0, crate::swb::zero());
        }
    }

    #[test]
    fn zig_zag() {
        for n in 0..4 {
            let lhs = ev(n).tensor(&id(n)).compose(&id(n).tensor(&coev(n))).unwrap();
            assert_eq!(lhs.equals(&id(n)).unwrap(), Comparison::Equal, "{lhs:?}");
            let rhs = id(n).tensor(&ev(n)).compose(&coev(n).tensor(&id(n))).unwrap();
            assert_eq!(rhs.equals(&id(n)).unwrap(), Comparison::Equal, "{rhs:?}");
        }
    }

    #[test]
    fn dagger_of_identity() {
        for n in 0..3 {
            assert_eq!(id(n).dagger().equals(&id(n)).unwrap(), Comparison::Equal);
        }
    }
}
