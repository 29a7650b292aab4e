//! Twisted chord diagrams: perfect matchings of `1..=2N` with a twist bit
//! on every arc.

use std::fmt;

use crate::error::{Result, SwbError};

/// A single arc `{lo, hi}` with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    pub lo: usize,
    pub hi: usize,
    pub twisted: bool,
}

impl Arc {
    /// `hi - lo - 1`, the number of sites strictly inside the arc.
    pub fn width(&self) -> usize {
        self.hi - self.lo - 1
    }

    pub fn crosses(&self, other: &Arc) -> bool {
        (self.lo < other.lo && other.lo < self.hi && self.hi < other.hi)
            || (other.lo < self.lo && self.lo < other.hi && other.hi < self.hi)
    }
}

/// A permutation of `1..=n`, stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((1..=n).collect())
    }

    /// Images of `1..=n` in order; must be a permutation.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n || seen[x] {
                return Err(SwbError::InvalidTcd(format!("{images:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Perm(images))
    }

    /// The cyclic permutation `c[0] -> c[1] -> ... -> c[0]` on `1..=n`.
    pub fn cycle(n: usize, c: &[usize]) -> Self {
        let mut p: Vec<usize> = (1..=n).collect();
        for k in 0..c.len() {
            p[c[k] - 1] = c[(k + 1) % c.len()];
        }
        Perm(p)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Perm(inv)
    }

    /// `other ∘ self`: apply `self` first.
    pub fn then(&self, other: &Perm) -> Self {
        Perm(self.0.iter().map(|&x| other.apply(x)).collect())
    }
}

/// A twisted chord diagram of rank `N` on the sites `1..=2N`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tcd {
    partner: Vec<usize>,
    twist: Vec<bool>,
}

impl fmt::Debug for Tcd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tcd[")?;
        for (k, a) in self.arcs().iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}-{}{}", a.lo, a.hi, if a.twisted { "t" } else { "" })?;
        }
        write!(f, "]")
    }
}

impl Tcd {
    /// The rank-zero diagram.
    pub fn empty() -> Self {
        Tcd { partner: Vec::new(), twist: Vec::new() }
    }

    /// Builds a diagram of rank `n` from arcs given as `(a, b, twisted)`.
    pub fn new(n: usize, arcs: &[(usize, usize, bool)]) -> Result<Self> {
        if arcs.len() != n {
            return Err(SwbError::InvalidTcd(format!("expected {n} arcs, found {}", arcs.len())));
        }
        let mut partner = vec![0; 2 * n];
        let mut twist = vec![false; 2 * n];
        for &(a, b, t) in arcs {
            for x in [a, b] {
                if x == 0 || x > 2 * n {
                    return Err(SwbError::IndexOutOfRange { index: x, max: 2 * n });
                }
                if partner[x - 1] != 0 {
                    return Err(SwbError::InvalidTcd(format!("site {x} used twice")));
                }
            }
            if a == b {
                return Err(SwbError::InvalidTcd(format!("arc {{{a},{a}}}")));
            }
            partner[a - 1] = b;
            partner[b - 1] = a;
            twist[a - 1] = t;
            twist[b - 1] = t;
        }
        Ok(Tcd { partner, twist })
    }

    /// Internal constructor from 1-based partner list and per-site twists.
    pub(crate) fn from_parts(partner: Vec<usize>, twist: Vec<bool>) -> Self {
        debug_assert!(partner.iter().enumerate().all(|(i, &j)| partner[j - 1] == i + 1));
        debug_assert!(partner.iter().enumerate().all(|(i, &j)| twist[i] == twist[j - 1]));
        Tcd { partner, twist }
    }

    pub fn rank(&self) -> usize {
        self.partner.len() / 2
    }

    /// Number of sites, `2N`.
    pub fn sites(&self) -> usize {
        self.partner.len()
    }

    fn check_site(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.sites() {
            Err(SwbError::IndexOutOfRange { index: i, max: self.sites() })
        } else {
            Ok(())
        }
    }

    /// Partner of site `i` (1-based). Panics when out of range.
    pub fn partner(&self, i: usize) -> usize {
        self.partner[i - 1]
    }

    pub fn partner_checked(&self, i: usize) -> Result<usize> {
        self.check_site(i)?;
        Ok(self.partner(i))
    }

    /// Twist of the arc through site `i`.
    pub fn twisted_at(&self, i: usize) -> bool {
        self.twist[i - 1]
    }

    pub fn arc_at(&self, i: usize) -> Arc {
        let j = self.partner(i);
        Arc { lo: i.min(j), hi: i.max(j), twisted: self.twisted_at(i) }
    }

    /// Arcs sorted by their lower end.
    pub fn arcs(&self) -> Vec<Arc> {
        (1..=self.sites()).filter(|&i| i < self.partner(i)).map(|i| self.arc_at(i)).collect()
    }

    pub fn is_orientable(&self) -> bool {
        self.twist.iter().all(|t| !t)
    }

    /// Index of the arc through site `i` in [`Tcd::arcs`] order.
    pub fn arc_index(&self, i: usize) -> usize {
        let lo = i.min(self.partner(i));
        (1..lo).filter(|&k| k < self.partner(k)).count()
    }

    /// Applies a permutation of the sites: `σ(P, s) = (σ(P), s∘σ⁻¹)`.
    pub fn permute(&self, sigma: &Perm) -> Result<Self> {
        if sigma.len() != self.sites() {
            return Err(SwbError::IndexOutOfRange { index: sigma.len(), max: self.sites() });
        }
        let mut partner = vec![0; self.sites()];
        let mut twist = vec![false; self.sites()];
        for i in 1..=self.sites() {
            let si = sigma.apply(i);
            partner[si - 1] = sigma.apply(self.partner(i));
            twist[si - 1] = self.twisted_at(i);
        }
        Ok(Tcd { partner, twist })
    }

    /// The order-reversing involution `i ↦ 2N + 1 - i`.
    pub fn omega(n: usize) -> Perm {
        Perm((1..=2 * n).rev().collect())
    }

    /// The cycle sending `i ↦ i - 1` and `1 ↦ 2N`.
    pub fn rotation(n: usize) -> Perm {
        let m = 2 * n;
        Perm((1..=m).map(|i| if i == 1 { m } else { i - 1 }).collect())
    }

    /// Mirror image, `ω_N(P, s)`.
    pub fn star(&self) -> Self {
        self.permute(&Self::omega(self.rank())).expect("sizes agree")
    }

    pub fn rotate(&self) -> Self {
        self.permute(&Self::rotation(self.rank())).expect("sizes agree")
    }

    /// Shifts every site by `d` into a diagram on `d + 1 ..`; helper for
    /// juxtaposition and insertion.
    fn shifted_arcs(&self, map: impl Fn(usize) -> usize) -> Vec<(usize, usize, bool)> {
        self.arcs().into_iter().map(|a| (map(a.lo), map(a.hi), a.twisted)).collect()
    }

    /// `top # bottom`: `bottom` keeps its sites, `top` is shifted above it.
    pub fn juxtapose(top: &Tcd, bottom: &Tcd) -> Tcd {
        Self::insert(top, 0, bottom).expect("height zero is always valid")
    }

    /// `outer #_d inner`: `inner` occupies `d+1 ..= d+2N₁` and `outer` is
    /// spread over the remaining sites in order.
    pub fn insert(outer: &Tcd, d: usize, inner: &Tcd) -> Result<Tcd> {
        if d > outer.sites() {
            return Err(SwbError::IndexOutOfRange { index: d, max: outer.sites() });
        }
        let w = inner.sites();
        let n = outer.rank() + inner.rank();
        let mut arcs = inner.shifted_arcs(|x| x + d);
        arcs.extend(outer.shifted_arcs(|x| if x <= d { x } else { x + w }));
        Tcd::new(n, &arcs)
    }

    /// Recovers `outer` from `outer #_d inner`, checking that the block is
    /// really there.
    pub fn extract_outer(&self, d: usize, inner: &Tcd) -> Result<Tcd> {
        let w = inner.sites();
        if d + w > self.sites() {
            return Err(SwbError::NotAnInsertion(d));
        }
        for i in 1..=w {
            let j = self.partner(d + i);
            if j <= d || j > d + w || j - d != inner.partner(i) || self.twisted_at(d + i) != inner.twisted_at(i) {
                return Err(SwbError::NotAnInsertion(d));
            }
        }
        let squash = |x: usize| if x <= d { x } else { x - w };
        let arcs: Vec<_> = self
            .arcs()
            .into_iter()
            .filter(|a| a.lo <= d || a.lo > d + w)
            .map(|a| (squash(a.lo), squash(a.hi), a.twisted))
            .collect();
        Tcd::new(self.rank() - inner.rank(), &arcs)
    }

    /// Splits `top # bottom` at rank `n1` when no arc straddles the cut.
    pub fn split(&self, n1: usize) -> Result<(Tcd, Tcd)> {
        let cut = 2 * n1;
        if cut > self.sites() {
            return Err(SwbError::NotAJuxtaposition(n1));
        }
        if (1..=cut).any(|i| self.partner(i) > cut) {
            return Err(SwbError::NotAJuxtaposition(n1));
        }
        let bottom: Vec<_> = self.arcs().into_iter().filter(|a| a.hi <= cut).map(|a| (a.lo, a.hi, a.twisted)).collect();
        let top: Vec<_> =
            self.arcs().into_iter().filter(|a| a.lo > cut).map(|a| (a.lo - cut, a.hi - cut, a.twisted)).collect();
        Ok((Tcd::new(self.rank() - n1, &top)?, Tcd::new(n1, &bottom)?))
    }

    /// The one-arc twisted diagram.
    pub fn mob() -> Tcd {
        Tcd::new(1, &[(1, 2, true)]).unwrap()
    }

    /// The one-arc untwisted diagram.
    pub fn ann() -> Tcd {
        Tcd::new(1, &[(1, 2, false)]).unwrap()
    }

    /// Two crossing untwisted arcs.
    pub fn tor() -> Tcd {
        Tcd::new(2, &[(1, 3, false), (2, 4, false)]).unwrap()
    }

    /// Parses compact notation like `"1-3 2-4t"`; used by tests and docs.
    pub fn parse(s: &str) -> Result<Tcd> {
        let mut arcs = Vec::new();
        for tok in s.split_whitespace() {
            let (body, tw) = match tok.strip_suffix('t') {
                Some(b) => (b, true),
                None => (tok, false),
            };
            let (a, b) = body.split_once('-').ok_or_else(|| SwbError::InvalidTcd(format!("bad arc token {tok:?}")))?;
            let a: usize = a.parse().map_err(|_| SwbError::InvalidTcd(format!("bad site {a:?}")))?;
            let b: usize = b.parse().map_err(|_| SwbError::InvalidTcd(format!("bad site {b:?}")))?;
            arcs.push((a, b, tw));
        }
        Tcd::new(arcs.len(), &arcs)
    }
}

/// All twisted chord diagrams of rank `n` in a fixed order. With
/// `orientable_only` the twist bits are all zero.
pub fn enumerate(n: usize, orientable_only: bool) -> Vec<Tcd> {
    let mut matchings = Vec::new();
    let mut partner = vec![0usize; 2 * n];
    fn rec(partner: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        match partner.iter().position(|&p| p == 0) {
            None => out.push(partner.clone()),
            Some(i) => {
                for j in i + 1..partner.len() {
                    if partner[j] == 0 {
                        partner[i] = j + 1;
                        partner[j] = i + 1;
                        rec(partner, out);
                        partner[i] = 0;
                        partner[j] = 0;
                    }
                }
            }
        }
    }
    rec(&mut partner, &mut matchings);
    let mut out = Vec::new();
    for m in matchings {
        let lows: Vec<usize> = (1..=2 * n).filter(|&i| i < m[i - 1]).collect();
        let masks = if orientable_only { 1u64 } else { 1u64 << n };
        for mask in 0..masks {
            let mut twist = vec![false; 2 * n];
            for (k, &i) in lows.iter().enumerate() {
                let t = mask >> k & 1 == 1;
                twist[i - 1] = t;
                twist[m[i - 1] - 1] = t;
            }
            out.push(Tcd::from_parts(m.clone(), twist));
        }
    }
    out
}

/// `(2n - 1)!!`, the number of perfect matchings on `2n` points.
pub fn double_factorial_odd(n: usize) -> u64 {
    (1..=n as u64).map(|k| 2 * k - 1).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_for_small_ranks() {
        let expected = [1usize, 2, 12, 120, 1680];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(enumerate(n, false).len(), e);
            assert_eq!(enumerate(n, true).len() as u64, double_factorial_odd(n));
        }
    }

    #[test]
    fn juxtaposition_and_insertion() {
        let p = Tcd::juxtapose(&Tcd::tor(), &Tcd::mob());
        assert_eq!(p, Tcd::parse("1-2t 3-5 4-6").unwrap());
        assert_eq!(p.star(), Tcd::parse("5-6t 2-4 1-3").unwrap());
        // rotating Tor # Möb gives Tor inserted at height one into Möb
        assert_eq!(p.rotate(), Tcd::insert(&Tcd::mob(), 1, &Tcd::tor()).unwrap());
        let q = Tcd::insert(&Tcd::ann(), 1, &Tcd::tor()).unwrap();
        assert_eq!(q, Tcd::parse("1-6 2-4 3-5").unwrap());
        assert_eq!(q.extract_outer(1, &Tcd::tor()).unwrap(), Tcd::ann());
        assert!(q.extract_outer(0, &Tcd::tor()).is_err());
        // height zero is juxtaposition below, full height is juxtaposition above
        assert_eq!(Tcd::insert(&Tcd::ann(), 0, &Tcd::mob()).unwrap(), Tcd::juxtapose(&Tcd::ann(), &Tcd::mob()));
        assert_eq!(Tcd::insert(&Tcd::ann(), 2, &Tcd::mob()).unwrap(), Tcd::juxtapose(&Tcd::mob(), &Tcd::ann()));
    }

    #[test]
    fn split_inverts_juxtaposition() {
        let p = Tcd::juxtapose(&Tcd::tor(), &Tcd::mob());
        assert_eq!(p.split(1).unwrap(), (Tcd::tor(), Tcd::mob()));
        assert!(p.split(2).is_err());
    }

    #[test]
    fn perm_helpers() {
        let c = Perm::cycle(4, &[4, 3, 2, 1]);
        assert_eq!(c, Tcd::rotation(2));
        assert_eq!(c.then(&c.inverse()), Perm::identity(4));
    }
}
