//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's own product, dimension or rigidity code.
#![allow(dead_code)]

use std::collections::BTreeMap;

/// Codimension partition of a Grassmannian index: lambda_i = n - k + i - a_i.
pub fn partition(a: &[u32], n: u32) -> Vec<u32> {
    let k = a.len() as u32;
    a.iter()
        .enumerate()
        .map(|(i, &x)| n - k + i as u32 + 1 - x)
        .collect()
}

/// Multiply s_nu by h_r inside the k x (n-k) box: add horizontal strips.
fn pieri_h(nu: &[u32], r: i64, k: usize, width: u32) -> Vec<Vec<u32>> {
    if r < 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; k];
    fn go(
        i: usize,
        left: u32,
        nu: &[u32],
        width: u32,
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if i == nu.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let cap = if i == 0 { width } else { nu[i - 1] };
        for v in nu[i]..=cap.min(nu[i] + left) {
            cur[i] = v;
            go(i + 1, left - (v - nu[i]), nu, width, cur, out);
        }
    }
    go(0, r as u32, nu, width, &mut cur, &mut out);
    out
}

fn permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    fn go(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            cur.push(x);
            go(rest, cur, out);
            cur.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    go(&mut (0..k).collect(), &mut Vec::new(), &mut out);
    out.into_iter()
        .map(|p| {
            let inv = (0..k)
                .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            let sign = if inv % 2 == 0 { 1 } else { -1 };
            (p, sign)
        })
        .collect()
}

/// s_lambda * s_mu in H*(G(k,n)) by Jacobi-Trudi: s_lambda = det(h_{lambda_i - i + j}).
pub fn jt_product(lambda: &[u32], mu: &[u32], k: usize, n: u32) -> BTreeMap<Vec<u32>, i64> {
    let width = n - k as u32;
    let mut total: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
    for (perm, sign) in permutations(k) {
        let mut acc: BTreeMap<Vec<u32>, i64> = BTreeMap::from([(mu.to_vec(), 1)]);
        for i in 0..k {
            let r = lambda[i] as i64 - i as i64 + perm[i] as i64;
            let mut next = BTreeMap::new();
            for (nu, c) in &acc {
                for p in pieri_h(nu, r, k, width) {
                    *next.entry(p).or_insert(0) += c;
                }
            }
            acc = next;
        }
        for (nu, c) in acc {
            *total.entry(nu).or_insert(0) += sign * c;
        }
    }
    total.retain(|_, c| *c != 0);
    total
}

/// Coefficient of the point class in s_lambda * s_mu.
pub fn jt_pairing(lambda: &[u32], mu: &[u32], k: usize, n: u32) -> i64 {
    let full = vec![n - k as u32; k];
    jt_product(lambda, mu, k, n).get(&full).copied().unwrap_or(0)
}

/// Dimension of a type A flag Schubert variety as the length of its
/// permutation: block 1 values ascending, then block 2, ..., then the rest.
pub fn inversion_dimension(entries: &[(u32, u32)], n: u32) -> u64 {
    let mut blocks: Vec<u32> = entries.iter().map(|e| e.1).collect();
    blocks.sort_unstable();
    blocks.dedup();
    let mut w = Vec::new();
    for b in blocks {
        let mut vals: Vec<u32> = entries.iter().filter(|e| e.1 == b).map(|e| e.0).collect();
        vals.sort_unstable();
        w.extend(vals);
    }
    let used = w.clone();
    w.extend((1..=n).filter(|v| !used.contains(v)));
    let mut inv = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                inv += 1;
            }
        }
    }
    inv
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of Schubert classes of OG(k,n) (one component when n = 2k):
/// 2^k C(m,k) with m = floor(n/2), or 2^(m-1) in the maximal even case.
pub fn og_class_count(k: u32, n: u32) -> u64 {
    let m = (n / 2) as u64;
    if n.is_multiple_of(2) && k as u64 == m {
        1 << (m - 1)
    } else {
        (1u64 << k) * binom(m, k as u64)
    }
}

/// Grassmannian essential and rigid rules, written out from the clause list.
pub fn grass_essential(a: &[u32], i: usize) -> bool {
    i == a.len() - 1 || a[i] + 1 < a[i + 1]
}

pub fn grass_rigid(a: &[u32], i: usize) -> bool {
    let below = if i == 0 { 0 } else { a[i - 1] };
    i == a.len() - 1 || a[i] as usize == i + 1 || a[i] + 3 <= a[i + 1] || a[i] == below + 1
}

/// Rigidity of flag entry i by definition: rigid in some image at a level
/// t at or above its label.
pub fn flag_rigid_by_projection(entries: &[(u32, u32)], i: usize, levels: u32) -> bool {
    (entries[i].1..=levels).any(|t| {
        let kept: Vec<usize> = (0..entries.len()).filter(|&p| entries[p].1 <= t).collect();
        let vals: Vec<u32> = kept.iter().map(|&p| entries[p].0).collect();
        let pos = kept.iter().position(|&p| p == i).unwrap();
        grass_essential(&vals, pos) && grass_rigid(&vals, pos)
    })
}

/// All step sequences with at least `min_len` steps and top step at most `max_top`.
pub fn step_sets(n: u32, max_top: u32, min_len: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for mask in 1u32..(1 << (n - 1)) {
        let steps: Vec<u32> = (1..n).filter(|d| mask & (1 << (d - 1)) != 0).collect();
        if steps.len() >= min_len && *steps.last().unwrap() <= max_top {
            out.push(steps);
        }
    }
    out
}
