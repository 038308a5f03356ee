//! Truncated integer power series.

/// `num / den` to `len` coefficients; `den[0]` must be `±1`.
pub fn divide(num: &[i128], den: &[i128], len: usize) -> Vec<i128> {
    assert!(matches!(den.first(), Some(1) | Some(-1)), "constant term of the denominator must be a unit");
    let d0 = den[0];
    let mut out = vec![0i128; len];
    for k in 0..len {
        let mut acc = num.get(k).copied().unwrap_or(0);
        for j in 1..=k.min(den.len().saturating_sub(1)) {
            acc -= den[j] * out[k - j];
        }
        out[k] = acc * d0;
    }
    out
}

pub fn multiply(a: &[i128], b: &[i128]) -> Vec<i128> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Coefficients of `(1 + t)^n`.
pub fn binomial_row(n: usize) -> Vec<i128> {
    let mut row = vec![1i128];
    for _ in 0..n {
        row = multiply(&row, &[1, 1]);
    }
    row
}

/// `p(-t)`.
pub fn negate_variable(p: &[i128]) -> Vec<i128> {
    p.iter().enumerate().map(|(i, &c)| if i % 2 == 0 { c } else { -c }).collect()
}

/// `p(t0)`.
pub fn evaluate(p: &[i128], t0: i128) -> i128 {
    p.iter().rev().fold(0, |acc, &c| acc * t0 + c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_series() {
        assert_eq!(divide(&[1], &[1, -1], 5), vec![1, 1, 1, 1, 1]);
        assert_eq!(divide(&[1], &[1, -2], 5), vec![1, 2, 4, 8, 16]);
        assert_eq!(divide(&[1], &[1, -2, 1], 5), vec![1, 2, 3, 4, 5]);
        assert_eq!(divide(&[1, 1], &[1, 0, -1], 5), vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn serre_bound_for_square_zero_plane() {
        // (1+t)^2 / (1 - 3t^2 - 2t^3) = 1/(1-2t)
        let s = divide(&binomial_row(2), &[1, 0, -3, -2], 8);
        assert_eq!(s, vec![1, 2, 4, 8, 16, 32, 64, 128]);
    }

    #[test]
    fn products_and_evaluation() {
        assert_eq!(multiply(&[1, -1], &[1, -1]), vec![1, -2, 1]);
        assert_eq!(binomial_row(3), vec![1, 3, 3, 1]);
        assert_eq!(negate_variable(&[1, 2, 1]), vec![1, -2, 1]);
        assert_eq!(evaluate(&[1, -2, 1], -1), 4);
        assert_eq!(evaluate(&[], 3), 0);
    }
}
