//! Deterministic one-dimensional search: a uniform grid followed by golden
//! section on the bracket around the best grid point.

/// Default number of grid intervals.
pub const DEFAULT_GRID: usize = 2048;

const GOLDEN_ITERS: usize = 80;

/// Minimum of `f` on `[lo, hi]`. Points where `f` returns `None` are
/// skipped; returns `None` when every grid point is skipped.
pub(crate) fn minimize<F>(f: F, lo: f64, hi: f64, grid: usize) -> Option<(f64, f64)>
where
    F: Fn(f64) -> Option<f64>,
{
    let grid = grid.max(1);
    if hi <= lo {
        return f(lo).map(|v| (lo, v));
    }
    let step = (hi - lo) / grid as f64;
    let at = |k: usize| if k == grid { hi } else { lo + step * k as f64 };
    let mut best: Option<(usize, f64)> = None;
    for k in 0..=grid {
        if let Some(v) = f(at(k)) {
            if best.map_or(true, |(_, b)| v < b) {
                best = Some((k, v));
            }
        }
    }
    let (k, v) = best?;
    let (mut a, mut b) = (at(k.saturating_sub(1)), at((k + 1).min(grid)));
    let mut out = (at(k), v);
    let inv = 0.5 * (libm::sqrt(5.0) - 1.0);
    let mut c = b - inv * (b - a);
    let mut d = a + inv * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    for _ in 0..GOLDEN_ITERS {
        let go_left = match (fc, fd) {
            (Some(x), Some(y)) => x <= y,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (None, None) => break,
        };
        if go_left {
            b = d;
            d = c;
            fd = fc;
            c = b - inv * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv * (b - a);
            fd = f(d);
        }
    }
    for (x, fx) in [(c, fc), (d, fd)] {
        if let Some(fx) = fx {
            if fx < out.1 {
                out = (x, fx);
            }
        }
    }
    Some(out)
}

pub(crate) fn maximize<F>(f: F, lo: f64, hi: f64, grid: usize) -> Option<(f64, f64)>
where
    F: Fn(f64) -> Option<f64>,
{
    minimize(|x| f(x).map(|v| -v), lo, hi, grid).map(|(x, v)| (x, -v))
}

/// Root of a continuous decreasing `f` on `[lo, hi]` with
/// `f(lo) >= target >= f(hi)`.
pub(crate) fn bisect_decreasing<F>(f: F, mut lo: f64, mut hi: f64, target: f64) -> f64
where
    F: Fn(f64) -> f64,
{
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if f(mid) >= target {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-10 {
            break;
        }
    }
    0.5 * (lo + hi)
}
