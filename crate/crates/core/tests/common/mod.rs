//! Independent brute-force oracles shared by the integration tests.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, VecDeque};

use permquot::permgroup::{Permutation, PermutationGroup};
use permquot::strata::StratumShape;

/// Five-case dimension formula for connected degree-`n` covers, written
/// out directly; `None` stands for the empty locus.
pub fn dim_formula(n: i64, d: i64, p: i64) -> Option<i64> {
    let wild = p != 0 && n % p == 0;
    let e = d - n + 1;
    if !wild {
        return (e == 0).then_some(0);
    }
    if e <= 0 || e % p == 0 {
        return None;
    }
    // ⌈e/p⌉ as the number of k ≥ 0 with kp < e.
    Some((0..).take_while(|k| k * p < e).count() as i64)
}

/// `2·(dim - d/2)`, or `None` for an empty locus.
pub fn twice_excess(n: i64, d: i64, p: i64) -> Option<i64> {
    dim_formula(n, d, p).map(|dim| 2 * dim - d)
}

/// Rank of an integer matrix over `Q`, by fraction-free elimination.
pub fn rank_over_q(mut m: Vec<Vec<i128>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in 0..rows {
            if r != rank && m[r][c] != 0 {
                let (a, b) = (m[rank][c], m[r][c]);
                for k in 0..cols {
                    m[r][k] = a * m[r][k] - b * m[rank][k];
                }
                let g = m[r].iter().fold(0i128, |g, &x| gcd(g, x.abs()));
                if g > 1 {
                    m[r].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Rank of an integer matrix reduced modulo the prime `p`.
pub fn rank_mod_p(m: &[Vec<i128>], p: i128) -> usize {
    let mut m: Vec<Vec<i128>> = m
        .iter()
        .map(|row| row.iter().map(|x| x.rem_euclid(p)).collect())
        .collect();
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = (1..p).find(|x| x * m[rank][c] % p == 1).unwrap();
        for k in 0..cols {
            m[rank][k] = m[rank][k] * inv % p;
        }
        for r in 0..rows {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c];
                for k in 0..cols {
                    m[r][k] = (m[r][k] - f * m[rank][k]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `M_g - I` for the permutation matrix sending `e_i` to `e_{g(i)}`.
pub fn matrix_minus_identity(g: &Permutation) -> Vec<Vec<i128>> {
    let n = g.degree();
    let mut m = vec![vec![0i128; n]; n];
    for i in 0..n {
        m[g.apply(i)][i] += 1;
        m[i][i] -= 1;
    }
    m
}

/// Every element of `S_n`.
pub fn symmetric_group(n: usize) -> Vec<Permutation> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
        if prefix.len() == used.len() {
            out.push(Permutation::from_images(prefix.clone()).unwrap());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Word length of every element of `S_n` in the transpositions, by BFS.
pub fn transposition_distances(n: usize) -> HashMap<Permutation, usize> {
    let mut gens = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            gens.push(Permutation::from_cycles(n, &[vec![i, j]]).unwrap());
        }
    }
    let id = Permutation::identity(n);
    let mut dist = HashMap::from([(id.clone(), 0)]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        let dx = dist[&x];
        for t in &gens {
            let y = t.compose(&x);
            if !dist.contains_key(&y) {
                dist.insert(y.clone(), dx + 1);
                queue.push_back(y);
            }
        }
    }
    dist
}

/// All subgroups of `S_n`: cyclic subgroups, closed under pairwise joins.
pub fn all_subgroups(n: usize) -> Vec<PermutationGroup> {
    let mut found: BTreeSet<Vec<Permutation>> = BTreeSet::new();
    let mut groups: Vec<PermutationGroup> = Vec::new();
    let mut add = |g: PermutationGroup, groups: &mut Vec<PermutationGroup>| {
        if found.insert(g.elements().to_vec()) {
            groups.push(g);
            true
        } else {
            false
        }
    };
    for g in symmetric_group(n) {
        add(PermutationGroup::closure(vec![g], n).unwrap(), &mut groups);
    }
    let mut frontier_start = 0;
    loop {
        let before = groups.len();
        for i in 0..before {
            for j in frontier_start.max(i + 1)..before {
                if groups[i].contains_all(&groups[j]) || groups[j].contains_all(&groups[i]) {
                    continue;
                }
                let mut gens = groups[i].generators().to_vec();
                gens.extend_from_slice(groups[j].generators());
                let joined = PermutationGroup::closure(gens, n).unwrap();
                add(joined, &mut groups);
            }
        }
        if groups.len() == before {
            return groups;
        }
        frontier_start = before;
    }
}

trait ContainsAll {
    fn contains_all(&self, other: &Self) -> bool;
}

impl ContainsAll for PermutationGroup {
    fn contains_all(&self, other: &Self) -> bool {
        other.generators().iter().all(|g| self.contains(g))
    }
}

/// Strata of degree `n` with total discriminant `d`, by listing every
/// sequence of `(part, exponent)` pairs and keeping canonical forms.
pub fn strata_brute_force(n: u32, d: u32) -> BTreeSet<StratumShape> {
    fn go(n_left: u32, d_left: u32, pairs: &mut Vec<(u32, u32)>, out: &mut BTreeSet<StratumShape>) {
        if n_left == 0 {
            if d_left == 0 {
                let (nu, delta): (Vec<u32>, Vec<u32>) = pairs.iter().copied().unzip();
                out.insert(StratumShape::new(nu, delta).unwrap());
            }
            return;
        }
        for part in 1..=n_left {
            let exponents: Vec<u32> = if part == 1 {
                vec![0]
            } else {
                (1..=d_left).collect()
            };
            for delta in exponents {
                pairs.push((part, delta));
                go(n_left - part, d_left - delta, pairs, out);
                pairs.pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    go(n, d, &mut Vec::new(), &mut out);
    out
}
