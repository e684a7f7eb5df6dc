//! Centered DFT on power-of-two grids.
//!
//! Index `i` of a centered spectrum corresponds to frequency `k = i - n/2`.
//! The phase `(-1)^k` accounts for grids whose first node sits at the
//! left end of a symmetric interval.

use std::cell::RefCell;

use num_complex::Complex64;
use rustfft::FftPlanner;

thread_local! {
    static PLANNER: RefCell<FftPlanner<f64>> = RefCell::new(FftPlanner::new());
}

fn sign(k: i64) -> f64 {
    if k.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

fn raw(buf: &mut [Complex64], inverse: bool) {
    let n = buf.len();
    let plan = PLANNER.with(|p| {
        let mut p = p.borrow_mut();
        if inverse {
            p.plan_fft_inverse(n)
        } else {
            p.plan_fft_forward(n)
        }
    });
    plan.process(buf);
}

/// `out[i] = (-1)^k Σ_j v_j e^{-2πi k j / n}`, `k = i - n/2`.
pub(crate) fn forward_1d(v: &[Complex64]) -> Vec<Complex64> {
    let n = v.len();
    let half = (n / 2) as i64;
    let mut buf = v.to_vec();
    raw(&mut buf, false);
    (0..n)
        .map(|i| {
            let k = i as i64 - half;
            buf[k.rem_euclid(n as i64) as usize] * sign(k)
        })
        .collect()
}

/// `v_j = Σ_k c_k (-1)^k e^{2πi k j / n}` (unnormalized).
pub(crate) fn inverse_1d(c: &[Complex64]) -> Vec<Complex64> {
    let n = c.len();
    let half = (n / 2) as i64;
    let mut buf = vec![Complex64::new(0.0, 0.0); n];
    for (i, &ci) in c.iter().enumerate() {
        let k = i as i64 - half;
        buf[k.rem_euclid(n as i64) as usize] = ci * sign(k);
    }
    raw(&mut buf, true);
    buf
}

fn apply_axes(v: &[Complex64], n: usize, d: usize, f: fn(&[Complex64]) -> Vec<Complex64>) -> Vec<Complex64> {
    match d {
        1 => f(v),
        _ => {
            let mut out = vec![Complex64::new(0.0, 0.0); n * n];
            for r in 0..n {
                let row = f(&v[r * n..(r + 1) * n]);
                out[r * n..(r + 1) * n].copy_from_slice(&row);
            }
            let mut col = vec![Complex64::new(0.0, 0.0); n];
            for c in 0..n {
                for r in 0..n {
                    col[r] = out[r * n + c];
                }
                let t = f(&col);
                for r in 0..n {
                    out[r * n + c] = t[r];
                }
            }
            out
        }
    }
}

pub(crate) fn forward(v: &[Complex64], n: usize, d: usize) -> Vec<Complex64> {
    apply_axes(v, n, d, forward_1d)
}

pub(crate) fn inverse(c: &[Complex64], n: usize, d: usize) -> Vec<Complex64> {
    apply_axes(c, n, d, inverse_1d)
}

/// Circular convolution `out_j = Σ_k w_k v_{j-k}` with `w` indexed by `k mod n`.
pub(crate) fn circular_convolve(v: &[Complex64], w: &[Complex64]) -> Vec<Complex64> {
    let n = v.len();
    let mut a = v.to_vec();
    let mut b = w.to_vec();
    raw(&mut a, false);
    raw(&mut b, false);
    for (x, y) in a.iter_mut().zip(&b) {
        *x *= y;
    }
    raw(&mut a, true);
    let s = 1.0 / n as f64;
    a.iter().map(|x| x * s).collect()
}

fn raw_axes(buf: &mut [Complex64], n: usize, d: usize, inverse: bool) {
    if d == 1 {
        raw(buf, inverse);
        return;
    }
    for row in buf.chunks_mut(n) {
        raw(row, inverse);
    }
    let mut col = vec![Complex64::new(0.0, 0.0); n];
    for c in 0..n {
        for r in 0..n {
            col[r] = buf[r * n + c];
        }
        raw(&mut col, inverse);
        for r in 0..n {
            buf[r * n + c] = col[r];
        }
    }
}

/// `out_j = Σ_k w_k v_{j-k}` on the periodic `n^d` index grid, `w` indexed by offsets mod `n`.
pub(crate) fn periodic_convolve(v: &[Complex64], w: &[Complex64], n: usize, d: usize) -> Vec<Complex64> {
    let mut a = v.to_vec();
    let mut b = w.to_vec();
    raw_axes(&mut a, n, d, false);
    raw_axes(&mut b, n, d, false);
    for (x, y) in a.iter_mut().zip(&b) {
        *x *= y;
    }
    raw_axes(&mut a, n, d, true);
    let s = 1.0 / (n.pow(d as u32)) as f64;
    a.iter().map(|x| x * s).collect()
}
