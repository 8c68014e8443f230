//! Correctly rounded floating-point summation.
//!
//! Cycle costs are summed with [`exact_sum`], so a cycle's cost does not
//! depend on where the traversal starts or on how its vertices are labelled.

/// Non-overlapping partials of finite doubles never exceed this many.
const MAX_PARTIALS: usize = 48;

/// The sum of `values` rounded once, to nearest-even. Falls back to plain
/// summation when a value is not finite or an intermediate overflows.
pub fn exact_sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    let mut partials = [0.0f64; MAX_PARTIALS];
    let mut len = 0;
    let mut plain = 0.0;
    let mut iter = values.into_iter();
    while let Some(mut x) = iter.next() {
        plain += x;
        if !x.is_finite() {
            return plain + iter.sum::<f64>();
        }
        let mut i = 0;
        for k in 0..len {
            let mut y = partials[k];
            if x.abs() < y.abs() {
                std::mem::swap(&mut x, &mut y);
            }
            let hi = x + y;
            let lo = y - (hi - x);
            if lo != 0.0 {
                partials[i] = lo;
                i += 1;
            }
            x = hi;
        }
        if !x.is_finite() {
            return plain + iter.sum::<f64>();
        }
        partials[i] = x;
        len = i + 1;
    }
    round_partials(&partials[..len])
}

fn round_partials(p: &[f64]) -> f64 {
    let mut n = p.len();
    if n == 0 {
        return 0.0;
    }
    n -= 1;
    let mut hi = p[n];
    let mut lo = 0.0;
    while n > 0 {
        let x = hi;
        n -= 1;
        let y = p[n];
        hi = x + y;
        lo = y - (hi - x);
        if lo != 0.0 {
            break;
        }
    }
    // half-way case: the remaining partials decide the rounding direction
    if n > 0 && ((lo < 0.0 && p[n - 1] < 0.0) || (lo > 0.0 && p[n - 1] > 0.0)) {
        let y = lo * 2.0;
        let x = hi + y;
        if y == x - hi {
            hi = x;
        }
    }
    hi
}
