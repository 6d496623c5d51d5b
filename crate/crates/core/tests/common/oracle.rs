//! Brute-force reference computations, written directly from the
//! definitions and sharing no code with the library.

#![allow(dead_code)]

fn sorted(x: &[f64]) -> Vec<f64> {
    let mut v = x.to_vec();
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    v
}

fn middle(v: &[f64]) -> f64 {
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        (v[n / 2 - 1] + v[n / 2]) / 2.0
    }
}

/// Median of the medcouple kernel over every pair `x_i <= m <= x_j`.
pub fn medcouple(x: &[f64]) -> f64 {
    let x = sorted(x);
    let m = middle(&x);
    if x[0] == x[x.len() - 1] {
        return 0.0;
    }
    let ties: Vec<usize> = (0..x.len()).filter(|&i| x[i] == m).collect();
    let k = ties.len() as i64;
    // 1-based rank of an index inside the tie block, counted from the lowest
    let tie_rank = |i: usize| ties.iter().position(|&t| t == i).map(|p| p as i64 + 1);

    let mut kernels = Vec::new();
    for i in 0..x.len() {
        if x[i] > m {
            continue;
        }
        for j in 0..x.len() {
            if x[j] < m {
                continue;
            }
            let h = match (tie_rank(i), tie_rank(j)) {
                (Some(ri), Some(rj)) => {
                    let s = ri + rj - 1;
                    if s < k {
                        -1.0
                    } else if s == k {
                        0.0
                    } else {
                        1.0
                    }
                }
                _ => ((x[j] - m) - (m - x[i])) / (x[j] - x[i]),
            };
            kernels.push(h);
        }
    }
    middle(&sorted(&kernels))
}

/// Correctly rounded sum via non-overlapping partials (Shewchuk).
pub fn exact_sum(terms: impl IntoIterator<Item = f64>) -> f64 {
    let mut partials: Vec<f64> = Vec::new();
    for mut x in terms {
        let mut kept = 0;
        for i in 0..partials.len() {
            let mut y = partials[i];
            if x.abs() < y.abs() {
                std::mem::swap(&mut x, &mut y);
            }
            let hi = x + y;
            let lo = y - (hi - x);
            if lo != 0.0 {
                partials[kept] = lo;
                kept += 1;
            }
            x = hi;
        }
        partials.truncate(kept);
        partials.push(x);
    }
    // top-down summation of the partials, with the half-way correction
    let mut hi = 0.0;
    let mut lo = 0.0;
    while let Some(x) = partials.pop() {
        let y = hi;
        hi = x + y;
        lo = y - (hi - x);
        if lo != 0.0 {
            break;
        }
    }
    if let Some(&next) = partials.last() {
        if (lo < 0.0 && next < 0.0) || (lo > 0.0 && next > 0.0) {
            let y = lo * 2.0;
            let x = hi + y;
            if y == x - hi {
                hi = x;
            }
        }
    }
    hi
}

/// `(skewness, kurtosis)` from population central moments, two passes.
pub fn moments(x: &[f64]) -> (f64, f64) {
    let n = x.len() as f64;
    let mean = exact_sum(x.iter().copied()) / n;
    let m = |p: i32| exact_sum(x.iter().map(|v| (v - mean).powi(p))) / n;
    let (m2, m3, m4) = (m(2), m(3), m(4));
    (m3 / m2.powf(1.5), m4 / (m2 * m2))
}

/// Letter values by twice-depth integer bookkeeping.
///
/// Returns `(depths, lower, upper)`; level 0 is the median.
pub fn letter_values(x: &[f64], stop_count: u64) -> (Vec<f64>, Vec<f64>, Vec<f64>) {
    let asc = sorted(x);
    let desc: Vec<f64> = asc.iter().rev().copied().collect();
    let n = asc.len() as u64;
    // value at depth D/2 counted from the front of `v`
    let at = |v: &[f64], twice: u64| {
        if twice.is_multiple_of(2) {
            v[(twice / 2 - 1) as usize]
        } else {
            (v[((twice - 1) / 2 - 1) as usize] + v[(twice.div_ceil(2) - 1) as usize]) / 2.0
        }
    };
    let mut twice = n + 1;
    let mut out = (
        vec![twice as f64 / 2.0],
        vec![middle(&asc)],
        vec![middle(&asc)],
    );
    loop {
        let next = 1 + (twice / 2);
        if next >= twice || next < stop_count {
            break;
        }
        out.0.push(next as f64 / 2.0);
        out.1.push(at(&asc, next));
        out.2.push(at(&desc, next));
        twice = next;
    }
    out
}

/// Trapezoid rule.
pub fn trapezoid(x: &[f64], y: &[f64]) -> f64 {
    (1..x.len())
        .map(|i| (x[i] - x[i - 1]) * (y[i] + y[i - 1]) / 2.0)
        .sum()
}

/// Type-7 quantile: linear interpolation at `(n - 1) p`.
pub fn quantile7(x: &[f64], p: f64) -> f64 {
    let v = sorted(x);
    let h = (v.len() - 1) as f64 * p;
    let lo = h.floor() as usize;
    if lo + 1 >= v.len() {
        return v[lo];
    }
    v[lo] + (h - lo as f64) * (v[lo + 1] - v[lo])
}
