use num_rational::Ratio;

/// `(p - 2) V - C(p - 1, 2)`.
pub fn mader_bound(p: usize, v: usize) -> i64 {
    let (p, v) = (p as i64, v as i64);
    (p - 2) * v - (p - 1) * (p - 2) / 2
}

/// `(p - 2) V - (p - 2)^2`.
pub fn trifree_bound(p: usize, v: usize) -> i64 {
    let (p, v) = (p as i64, v as i64);
    (p - 2) * v - (p - 2) * (p - 2)
}

/// `3V - 9 + t/3`.
pub fn apex_bound(v: usize, t: usize) -> Ratio<i64> {
    Ratio::from_integer(3 * v as i64 - 9) + Ratio::new(t as i64, 3)
}

/// `floor(n^2 / 4)`, the largest edge count of a triangle-free graph on `n` vertices.
pub fn mantel_bound(n: usize) -> u64 {
    (n as u64 * n as u64) / 4
}
