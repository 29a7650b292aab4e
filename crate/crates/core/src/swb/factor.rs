//! Factoring a datum into rank-zero pieces and generators.

use crate::chord::{caravan_normalize, Slide};
use crate::error::{Result, SwbError};

use super::datum::SwbDatum;
use super::frame::Frame;
use super::generators::{insert_left_n, mobius_gen, torus_gen};
use super::handle::apply_handle_slides;
use super::juxt::{factorize, juxtapose};

/// A factorization: the slides that bring the diagram to its caravan form,
/// and the pieces, top first, whose juxtaposition is the slid datum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub slides: Vec<Slide>,
    pub factors: Vec<SwbDatum>,
}

/// Juxtaposes the factors, the first on top, and returns the result with
/// the total linking number.
pub fn reassemble(factors: &[SwbDatum]) -> Result<(SwbDatum, usize)> {
    let (last, rest) = factors.split_last().ok_or_else(|| SwbError::InvalidDatum("no factors".into()))?;
    let mut cur = last.clone();
    let mut linking = 0;
    for top in rest.iter().rev() {
        let (next, l) = juxtapose(top, &cur)?;
        linking += l;
        cur = next;
    }
    Ok((cur, linking))
}

/// Factors `th`, up to handle slides, into rank-zero data and data of the
/// forms `I_L^a(T_{λ,μ})` and `I_L^b(M_ν)`, listed top first.
pub fn factor_generators(th: &SwbDatum) -> Result<Factorization> {
    if th.rank() == 0 {
        return Ok(Factorization { slides: Vec::new(), factors: vec![th.clone()] });
    }
    let (_, slides) = caravan_normalize(th.frame().tcd())?;
    let mut cur = apply_handle_slides(th, &slides);
    let mut bottom_up = Vec::new();
    while cur.rank() > 0 {
        let t = cur.frame().tcd();
        let block = if t.partner(1) == 3 { 2 } else { 1 };
        let (lower, upper) = if block == cur.rank() {
            (cur.clone(), None)
        } else {
            let (a, b) = factorize(&cur, block)?;
            (a, Some(b))
        };
        let [t1, x, t2] = peel(&lower)?;
        bottom_up.extend([t1, x, t2]);
        match upper {
            Some(u) => cur = u,
            None => break,
        }
    }
    bottom_up.reverse();
    Ok(Factorization { slides, factors: bottom_up })
}

/// Splits a one-block datum as `T₂ # I_L^a(G) # T₁` with rank-zero `T₁`
/// and `T₂` and a generator `G`; returns `[T₁, I_L^a(G), T₂]`.
///
/// The vertices up to the last one on the lower half of the block's bands
/// form an interval of the boundary order, and so do the rest. Parts inside
/// the lower interval go into `T₁`, parts inside the upper one into `T₂`,
/// and the parts joining the two run along the `a` added left strands.
fn peel(th: &SwbDatum) -> Result<[SwbDatum; 3]> {
    let f = th.frame();
    let t = f.tcd();
    let (g, half_levels) = match (t.sites(), t.partner(1), t.twisted_at(1)) {
        (4, 3, false) if t.partner(2) == 4 && !t.twisted_at(2) => (torus_gen(f.level_len(2), f.level_len(1)), 2),
        (2, 2, true) => (mobius_gen(f.level_len(1)), 1),
        _ => return Err(SwbError::InvalidDatum(format!("not a single caravan block: {t:?}"))),
    };
    let n = th.south();
    let cut = f.level_start(half_levels + 1);
    let low: Vec<usize> = (0..cut).collect();
    let band_low = cut - n;
    let band_high = f.level_start(f.top()) - cut;
    debug_assert_eq!(band_low, band_high);

    // crossing parts, outermost first
    let crossing: Vec<usize> = low.iter().copied().filter(|&v| th.mate(v) >= cut).collect();
    let a = crossing.len();
    let x = insert_left_n(&g, a);
    let mid = a + band_low;

    // T₁: south = the datum's south, north = the slab's lower edge. Its
    // index order is south, then the band points (matching the lower band
    // vertices in order), then the left strands from right to left.
    let lower_index = |v: usize| v; // south and lower band vertices keep their place
    let lower_strand = |j: usize| n + band_low + (a - 1 - j);
    let mut mate1 = vec![usize::MAX; n + mid];
    for &v in &low {
        let w = th.mate(v);
        if w < cut {
            mate1[lower_index(v)] = lower_index(w);
        }
    }
    for (i, &v) in crossing.iter().enumerate() {
        mate1[lower_index(v)] = lower_strand(i);
        mate1[lower_strand(i)] = lower_index(v);
    }
    let t1 = SwbDatum::from_mate(Frame::square(n, mid), mate1)?;

    // T₂: south = the slab's upper edge, left strands first, then the band
    // points (matching the upper band vertices in order); then the
    // datum's north in index order.
    let m = th.north();
    let total = th.vertex_count();
    let upper_index = |v: usize| v - cut + a;
    let mut mate2 = vec![usize::MAX; mid + m];
    for v in cut..total {
        let w = th.mate(v);
        if w >= cut {
            mate2[upper_index(v)] = upper_index(w);
        }
    }
    for (i, &v) in crossing.iter().enumerate() {
        let u = upper_index(th.mate(v));
        mate2[i] = u;
        mate2[u] = i;
    }
    let t2 = SwbDatum::from_mate(Frame::square(mid, m), mate2)?;
    Ok([t1, x, t2])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::swb::generators::identity;

    #[test]
    fn rank_zero_is_its_own_factor() {
        let th = identity(2);
        assert_eq!(factor_generators(&th).unwrap().factors, vec![th]);
    }

    #[test]
    fn generators_peel_to_themselves() {
        for (l, m) in [(0, 0), (1, 1), (2, 1)] {
            let g = torus_gen(l, m);
            let fz = factor_generators(&g).unwrap();
            assert!(fz.slides.is_empty());
            assert_eq!(fz.factors[1], g);
            assert_eq!(reassemble(&fz.factors).unwrap(), (g, 0));
        }
        let g = mobius_gen(2);
        let fz = factor_generators(&g).unwrap();
        assert_eq!(fz.factors[1], g);
        assert_eq!(reassemble(&fz.factors).unwrap(), (g, 0));
    }
}
