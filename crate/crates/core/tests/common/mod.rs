#![allow(dead_code)]

use ppspace::Tuple;

/// Every sorted tuple with `1 <= r <= max_r` and entries in `1..=max_n`.
pub fn sweep(max_r: usize, max_n: u32) -> Vec<Tuple> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(cur: &mut Vec<u32>, from: u32, max_r: usize, max_n: u32, out: &mut Vec<Tuple>) {
        if !cur.is_empty() {
            out.push(Tuple::new(cur.clone()).unwrap());
        }
        if cur.len() == max_r {
            return;
        }
        for n in from..=max_n {
            cur.push(n);
            go(cur, n, max_r, max_n, out);
            cur.pop();
        }
    }
    go(&mut cur, 1, max_r, max_n, &mut out);
    out
}

/// Every sorted tuple with `|n| <= max_dim`.
pub fn by_dimension(max_dim: u32) -> Vec<Tuple> {
    let mut out = Vec::new();
    fn go(cur: &mut Vec<u32>, from: u32, left: u32, out: &mut Vec<Tuple>) {
        if !cur.is_empty() {
            out.push(Tuple::new(cur.clone()).unwrap());
        }
        for n in from..=left {
            cur.push(n);
            go(cur, n, left - n, out);
            cur.pop();
        }
    }
    go(&mut Vec::new(), 1, max_dim, &mut out);
    out
}

/// Coefficients of `(1 + t + ... + t^{n_1}) ∏_{i>=2} (1 + t^{n_i})`,
/// expanded naively.
pub fn poincare_oracle(t: &Tuple) -> Vec<u128> {
    let mut poly = vec![1u128; t.min() as usize + 1];
    for &n in &t.entries()[1..] {
        let mut next = vec![0u128; poly.len() + n as usize];
        for (d, &c) in poly.iter().enumerate() {
            next[d] += c;
            next[d + n as usize] += c;
        }
        poly = next;
    }
    poly
}
