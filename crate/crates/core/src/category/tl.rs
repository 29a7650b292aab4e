//! A stand-alone Temperley–Lieb implementation used to cross-check the
//! rank-zero part of the category. It deliberately shares nothing with
//! the square-with-bands code.

use crate::error::{Result, SwbError};

/// A planar matching between `bottom` points (numbered `0..bottom` left
/// to right) and `top` points (numbered `bottom..bottom+top` left to
/// right).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TlDiagram {
    pub bottom: usize,
    pub top: usize,
    pub partner: Vec<usize>,
}

impl TlDiagram {
    pub fn identity(n: usize) -> Self {
        let mut partner = vec![0; 2 * n];
        for i in 0..n {
            partner[i] = n + i;
            partner[n + i] = i;
        }
        TlDiagram { bottom: n, top: n, partner }
    }

    /// The generator `e_i` on `n` strands, joining strands `i` and `i+1`
    /// (zero-based) at both ends.
    pub fn e(n: usize, i: usize) -> Self {
        let mut d = Self::identity(n);
        d.partner[i] = i + 1;
        d.partner[i + 1] = i;
        d.partner[n + i] = n + i + 1;
        d.partner[n + i + 1] = n + i;
        d
    }

    /// Position of a point when walking around the boundary: bottom left to
    /// right, then top right to left.
    fn around(&self, p: usize) -> usize {
        if p < self.bottom {
            p
        } else {
            self.bottom + self.top - 1 - (p - self.bottom)
        }
    }

    pub fn is_planar(&self) -> bool {
        let n = self.bottom + self.top;
        if self.partner.len() != n {
            return false;
        }
        let mut by_pos = vec![0; n];
        for p in 0..n {
            by_pos[self.around(p)] = self.around(self.partner[p]);
        }
        let mut stack = Vec::new();
        for (i, &j) in by_pos.iter().enumerate() {
            if j == i {
                return false;
            }
            if j > i {
                stack.push(i);
            } else if stack.pop() != Some(j) {
                return false;
            }
        }
        true
    }

    /// Every planar matching with the given numbers of points.
    pub fn all(bottom: usize, top: usize) -> Vec<TlDiagram> {
        let n = bottom + top;
        if n % 2 == 1 {
            return Vec::new();
        }
        let mut out = Vec::new();
        for around in noncrossing(n) {
            // translate positions back to point numbers
            let point = |pos: usize| if pos < bottom { pos } else { bottom + (n - 1 - pos) };
            let mut partner = vec![0; n];
            for (pos, &q) in around.iter().enumerate() {
                partner[point(pos)] = point(q);
            }
            out.push(TlDiagram { bottom, top, partner });
        }
        out.sort();
        out
    }
}

fn noncrossing(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    // point 0 pairs with an odd position k; inside and outside are independent
    for k in (1..n).step_by(2) {
        for inner in noncrossing(k - 1) {
            for outer in noncrossing(n - k - 1) {
                let mut m = vec![0; n];
                m[0] = k;
                m[k] = 0;
                for (i, &j) in inner.iter().enumerate() {
                    m[i + 1] = j + 1;
                }
                for (i, &j) in outer.iter().enumerate() {
                    m[i + k + 1] = j + k + 1;
                }
                out.push(m);
            }
        }
    }
    out
}

/// `d2 ∘ d1`: stacks `d2` on top of `d1` and follows strands through the
/// middle row, returning the result and the number of closed loops.
pub fn tl_oracle_compose(d1: &TlDiagram, d2: &TlDiagram) -> Result<(TlDiagram, usize)> {
    if d1.top != d2.bottom {
        return Err(SwbError::ArityMismatch { expected: d1.top, found: d2.bottom });
    }
    let (n, m, l) = (d1.bottom, d1.top, d2.top);
    // middle point k is d1's point n+k and d2's point k
    let mut used = vec![false; m];
    let mut partner = vec![usize::MAX; n + l];

    // outer end in the composite; `from_lower` says which diagram we leave
    let walk = |start_lower: bool, start: usize, used: &mut Vec<bool>| -> usize {
        let (mut lower, mut p) = (start_lower, start);
        loop {
            if lower {
                let q = d1.partner[p];
                if q < n {
                    return q;
                }
                used[q - n] = true;
                lower = false;
                p = q - n;
            } else {
                let q = d2.partner[p];
                if q >= m {
                    return n + (q - m);
                }
                used[q] = true;
                lower = true;
                p = n + q;
            }
        }
    };
    for i in 0..n {
        partner[i] = walk(true, i, &mut used);
    }
    for j in 0..l {
        partner[n + j] = walk(false, m + j, &mut used);
    }
    let mut loops = 0;
    for k in 0..m {
        if used[k] {
            continue;
        }
        loops += 1;
        let mut p = k;
        loop {
            used[p] = true;
            let q = d2.partner[p];
            used[q] = true;
            p = d1.partner[n + q] - n;
            if p == k {
                break;
            }
        }
    }
    Ok((TlDiagram { bottom: n, top: l, partner }, loops))
}

/// Horizontal juxtaposition, `a` on the left.
pub fn tl_oracle_tensor(a: &TlDiagram, b: &TlDiagram) -> TlDiagram {
    let (n, m) = (a.bottom + b.bottom, a.top + b.top);
    let map_a = |p: usize| if p < a.bottom { p } else { n + (p - a.bottom) };
    let map_b = |p: usize| if p < b.bottom { a.bottom + p } else { n + a.top + (p - b.bottom) };
    let mut partner = vec![0; n + m];
    for p in 0..a.partner.len() {
        partner[map_a(p)] = map_a(a.partner[p]);
    }
    for p in 0..b.partner.len() {
        partner[map_b(p)] = map_b(b.partner[p]);
    }
    TlDiagram { bottom: n, top: m, partner }
}
