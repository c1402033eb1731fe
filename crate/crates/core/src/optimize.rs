//! Grid scan followed by golden-section refinement.
//!
//! Used to locate the entanglement optima. The objectives are cheap and
//! smooth, so a coarse grid brackets the global maximum and golden-section
//! search polishes it one axis at a time.

use crate::error::{invalid, Result};
use crate::scalar::Real;

/// Location and value of a maximum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Maximum<T, const D: usize> {
    pub at: [T; D],
    pub value: T,
}

/// Golden-section search for the maximum of a unimodal `f` on `[lo, hi]`,
/// stopping once the bracket is narrower than `tol`.
pub fn golden_section_max<T, F>(mut f: F, lo: T, hi: T, tol: T) -> (T, T)
where
    T: Real,
    F: FnMut(T) -> T,
{
    let inv_phi = (T::lit(5.0).sqrt() - T::one()) * T::lit(0.5);
    let (mut a, mut b) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    let mut c = b - (b - a) * inv_phi;
    let mut d = a + (b - a) * inv_phi;
    let mut fc = f(c);
    let mut fd = f(d);
    while (b - a).abs() > tol {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - (b - a) * inv_phi;
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + (b - a) * inv_phi;
            fd = f(d);
        }
    }
    // compare against the ends so boundary maxima are not lost
    let mid = (a + b) * T::lit(0.5);
    [(mid, f(mid)), (lo, f(lo)), (hi, f(hi))].into_iter().fold(
        (mid, T::neg_infinity()),
        |best, cand| {
            if cand.1 > best.1 {
                cand
            } else {
                best
            }
        },
    )
}

fn linspace<T: Real>(lo: T, hi: T, n: usize) -> impl Iterator<Item = T> {
    let step = if n > 1 {
        (hi - lo) / T::from_count(n - 1)
    } else {
        T::zero()
    };
    (0..n).map(move |i| {
        if i + 1 == n && n > 1 {
            hi
        } else {
            lo + step * T::from_count(i)
        }
    })
}

fn check_axis<T: Real>(lo: T, hi: T, n: usize) -> Result<()> {
    if !(lo.is_finite() && hi.is_finite()) || lo > hi {
        return Err(invalid("search range", "need finite lo ≤ hi"));
    }
    if n < 2 {
        return Err(invalid("grid", "need at least two points per axis"));
    }
    Ok(())
}

/// One-dimensional maximum: grid of `n` points, then golden-section on the
/// cells adjacent to the best grid point.
pub fn maximize_1d<T, F>(mut f: F, lo: T, hi: T, n: usize, tol: T) -> Result<Maximum<T, 1>>
where
    T: Real,
    F: FnMut(T) -> T,
{
    check_axis(lo, hi, n)?;
    let grid: Vec<T> = linspace(lo, hi, n).collect();
    let (best, _) = grid
        .iter()
        .enumerate()
        .map(|(i, &x)| (i, f(x)))
        .fold((0, T::neg_infinity()), |b, c| if c.1 > b.1 { c } else { b });
    let a = grid[best.saturating_sub(1)];
    let b = grid[(best + 1).min(n - 1)];
    let (x, value) = golden_section_max(&mut f, a, b, tol);
    Ok(Maximum { at: [x], value })
}

/// Two-dimensional maximum: `nx × ny` grid scan, then alternating per-axis
/// golden-section refinement inside the neighbouring grid cells until the
/// location moves by less than `tol`.
pub fn maximize_2d<T, F>(
    mut f: F,
    x_range: (T, T, usize),
    y_range: (T, T, usize),
    tol: T,
) -> Result<Maximum<T, 2>>
where
    T: Real,
    F: FnMut(T, T) -> T,
{
    let (x_lo, x_hi, nx) = x_range;
    let (y_lo, y_hi, ny) = y_range;
    check_axis(x_lo, x_hi, nx)?;
    check_axis(y_lo, y_hi, ny)?;
    let xs: Vec<T> = linspace(x_lo, x_hi, nx).collect();
    let ys: Vec<T> = linspace(y_lo, y_hi, ny).collect();

    let mut best = (0usize, 0usize, T::neg_infinity());
    for (i, &x) in xs.iter().enumerate() {
        for (j, &y) in ys.iter().enumerate() {
            let v = f(x, y);
            if v > best.2 {
                best = (i, j, v);
            }
        }
    }
    let (bi, bj, _) = best;
    let (xa, xb) = (xs[bi.saturating_sub(1)], xs[(bi + 1).min(nx - 1)]);
    let (ya, yb) = (ys[bj.saturating_sub(1)], ys[(bj + 1).min(ny - 1)]);

    let (mut x, mut y) = (xs[bi], ys[bj]);
    for _ in 0..64 {
        let (next_x, _) = golden_section_max(|t| f(t, y), xa, xb, tol * T::lit(0.1));
        let (next_y, _) = golden_section_max(|t| f(next_x, t), ya, yb, tol * T::lit(0.1));
        let moved = (next_x - x).abs().max((next_y - y).abs());
        x = next_x;
        y = next_y;
        if moved < tol {
            break;
        }
    }
    Ok(Maximum {
        at: [x, y],
        value: f(x, y),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_section_finds_parabola_peak() {
        let (x, v) = golden_section_max(|x: f64| -(x - 0.3).powi(2) + 2.0, -1.0, 1.0, 1e-8);
        assert!((x - 0.3).abs() < 1e-7);
        assert!((v - 2.0).abs() < 1e-12);
    }

    #[test]
    fn golden_section_keeps_boundary_maximum() {
        let (x, v) = golden_section_max(|x: f64| x, 0.0, 1.0, 1e-6);
        assert_eq!(x, 1.0);
        assert_eq!(v, 1.0);
    }

    #[test]
    fn grid_brackets_global_maximum() {
        // two bumps, the right one higher
        let f =
            |x: f64| (-(x - 0.2).powi(2) * 200.0).exp() + 1.5 * (-(x - 0.8).powi(2) * 200.0).exp();
        let m = maximize_1d(f, 0.0, 1.0, 51, 1e-9).unwrap();
        assert!((m.at[0] - 0.8).abs() < 1e-6);
    }

    #[test]
    fn two_dimensional_peak() {
        let f = |x: f64, y: f64| -(x - 0.37).powi(2) - 2.0 * (y + 0.11).powi(2);
        let m = maximize_2d(f, (0.0, 1.0, 21), (-1.0, 1.0, 21), 1e-6).unwrap();
        assert!((m.at[0] - 0.37).abs() < 1e-5);
        assert!((m.at[1] + 0.11).abs() < 1e-5);
        assert!(m.value.abs() < 1e-9);
    }

    #[test]
    fn rejects_degenerate_axes() {
        assert!(maximize_1d(|x: f64| x, 0.0, 1.0, 1, 1e-3).is_err());
        assert!(maximize_1d(|x: f64| x, 1.0, 0.0, 5, 1e-3).is_err());
    }
}
