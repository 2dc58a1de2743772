use crate::error::Result;
use crate::qkernel::qpoch;
use crate::scalar::ExactScalar;

use super::{Orientation, TriangularMatrix};

/// `M_{r,r-2i}(u, v; x, y; q)`, nonzero only for even offsets.
pub fn mat_m<F: ExactScalar>(u: &F, v: &F, x: &F, y: &F, q: &F, size: usize) -> Result<TriangularMatrix<F>> {
    let xy = x.checked_div(y)?;
    TriangularMatrix::from_fn(size, Orientation::Lower, |r, c| {
        let d = r - c;
        if d % 2 == 1 {
            return Ok(F::zero());
        }
        let (r, i) = (r as i64, (d / 2) as i64);
        let num = (y.clone() * v).powu(i as u64)
            * &qpoch(&xy, q, i)?
            * &qpoch(&(u.clone() * &q.powi(r - 2 * i)?), q, 2 * i)?;
        let den = qpoch(q, q, i)?
            * &qpoch(&(u.clone() * x * &q.powi(r - i)?), q, i)?
            * &qpoch(&(u.clone() * y * &q.powi(r - 2 * i + 1)?), q, i)?;
        num.checked_div(&den)
    })
}

/// The conjugated matrix `M~(u, v; x, y; t)`, built from `u^{1/2}` and
/// `v^{1/2}` so that no root is ever taken.
pub fn mat_mtilde<F: ExactScalar>(
    u_half: &F,
    v_half: &F,
    x: &F,
    y: &F,
    t: &F,
    size: usize,
) -> Result<TriangularMatrix<F>> {
    let t2 = t.square();
    let u = u_half.square();
    let xy = x.checked_div(y)?;
    let w = (y.clone() * u_half).checked_div(v_half)?;
    TriangularMatrix::from_fn(size, Orientation::Lower, |r, c| {
        let d = r - c;
        if d % 2 == 1 {
            return Ok(F::zero());
        }
        let (r, i) = (r as i64, (d / 2) as i64);
        let num = qpoch(&xy, &t2, i)?
            * &qpoch(&(v_half.clone() * &t.powi(r - 2 * i + 2)?), t, 2 * i)?
            * &qpoch(&(u.clone() * &t.powi(2 * r - 4 * i)?), &t2, 2 * i)?
            * &w.powu(i as u64);
        let den = qpoch(&t2, &t2, i)?
            * &qpoch(&(u_half.clone() * &t.powi(r - 2 * i)?), t, 2 * i)?
            * &qpoch(&(u.clone() * x * &t.powi(2 * r - 2 * i)?), &t2, i)?
            * &qpoch(&(u.clone() * y * &t.powi(2 * r - 4 * i + 2)?), &t2, i)?;
        num.checked_div(&den)
    })
}

/// `K_{i,j}(x, y; q)`.
pub fn mat_k<F: ExactScalar>(x: &F, y: &F, q: &F, size: usize) -> Result<TriangularMatrix<F>> {
    let xy = x.checked_div(y)?;
    TriangularMatrix::from_fn(size, Orientation::Lower, |i, j| {
        let m = (i - j) as i64;
        let num = y.powu(m as u64) * &qpoch(&xy, q, m)?;
        let den = qpoch(q, q, m)?
            * &qpoch(&(x.clone() * &q.powi((i + j) as i64)?), q, m)?
            * &qpoch(&(y.clone() * &q.powi(2 * j as i64 + 1)?), q, m)?;
        num.checked_div(&den)
    })
}

/// `N_{r,r-i}(u_1..u_4, v; x, y; t)`.
pub fn mat_n<F: ExactScalar>(us: &[F; 4], v: &F, x: &F, y: &F, t: &F, size: usize) -> Result<TriangularMatrix<F>> {
    let xy = x.checked_div(y)?;
    TriangularMatrix::from_fn(size, Orientation::Lower, |r, c| {
        let (r, i) = (r as i64, (r - c) as i64);
        let mut num = y.powu(i as u64) * &qpoch(&xy, t, i)?;
        for u in us {
            num = num * &qpoch(&(u.clone() * &t.powi(r - i)?), t, i)?;
        }
        let den = qpoch(t, t, i)?
            * &qpoch(&(x.clone() * v * &t.powi(2 * r - i)?), t, i)?
            * &qpoch(&(y.clone() * v * &t.powi(2 * r - 2 * i + 1)?), t, i)?;
        num.checked_div(&den)
    })
}

/// Diagonal `d_M(u, v)_r` up to the root-valued factor `(u^{1/4}/v^{3/4})^r`,
/// which only enters conjugation through even offsets; see [`mtilde_by_conjugation`].
fn d_m_rational<F: ExactScalar>(u_half: &F, v_half: &F, t: &F, size: usize) -> Result<Vec<F>> {
    let t2 = t.square();
    (0..size as i64)
        .map(|r| qpoch(&(t2.clone() * v_half), t, r)?.checked_div(&qpoch(u_half, t, r)?))
        .collect()
}

/// `M~` obtained literally as `d_r M(u, v; x, y; t^2)_{r,r-2i} / d_{r-2i}`.
pub fn mtilde_by_conjugation<F: ExactScalar>(
    u_half: &F,
    v_half: &F,
    x: &F,
    y: &F,
    t: &F,
    size: usize,
) -> Result<TriangularMatrix<F>> {
    let base = mat_m(&u_half.square(), &v_half.square(), x, y, &t.square(), size)?;
    let d = d_m_rational(u_half, v_half, t, size)?;
    // (u^{1/4} / v^{3/4})^{2i} = (u^{1/2} / v^{3/2})^i
    let step = u_half.checked_div(&v_half.powu(3))?;
    TriangularMatrix::from_fn(size, Orientation::Lower, |r, c| {
        let x = base.get(r, c);
        if x.is_zero() {
            return Ok(F::zero());
        }
        let i = ((r - c) / 2) as u64;
        (x.clone() * &d[r] * &step.powu(i)).checked_div(&d[c])
    })
}

/// `N` obtained literally as the conjugation of `K(xv, yv; t)` by
/// `d_N(u, v)_r = v^{-r} prod_k (u_k; t)_r`.
pub fn n_by_conjugation<F: ExactScalar>(
    us: &[F; 4],
    v: &F,
    x: &F,
    y: &F,
    t: &F,
    size: usize,
) -> Result<TriangularMatrix<F>> {
    let base = mat_k(&(x.clone() * v), &(y.clone() * v), t, size)?;
    let d: Vec<F> = (0..size as i64)
        .map(|r| {
            let mut acc = v.powi(-r)?;
            for u in us {
                acc = acc * &qpoch(u, t, r)?;
            }
            Ok(acc)
        })
        .collect::<Result<_>>()?;
    base.conjugate(&d)
}
