//! Fixtures and independent oracles shared by the integration tests.
#![allow(dead_code)]

use hyperee::families::{
    complete_uniform, cycle, fano, g_star_star, hyperstar, path_p3, unicyclic_cm, x_n,
};
use hyperee::Hypergraph;

pub struct Fixture {
    pub name: String,
    pub h: Hypergraph,
    /// Uniformity the fixture is meant to be read with.
    pub k: usize,
}

fn fx(name: impl Into<String>, h: Hypergraph, k: usize) -> Fixture {
    Fixture {
        name: name.into(),
        h,
        k,
    }
}

/// Every named family instance small enough for exhaustive oracles.
pub fn fixtures() -> Vec<Fixture> {
    let mut out = vec![
        fx("single-3-edge", complete_uniform(3, 3).unwrap(), 3),
        fx("edgeless-4", Hypergraph::edgeless(4), 3),
        fx("edgeless-6", Hypergraph::edgeless(6), 2),
        fx("fano", fano(), 3),
        fx("C2,3", cycle(2, 3).unwrap().0, 3),
        fx("C3,3", cycle(3, 3).unwrap().0, 3),
        fx("C5,2", cycle(5, 2).unwrap().0, 2),
        fx("C2,4", cycle(2, 4).unwrap().0, 4),
        fx("C3,4", cycle(3, 4).unwrap().0, 4),
        fx("C2(2,1)", unicyclic_cm(3, &[2, 1]).unwrap().0, 3),
        fx("C3(1,1,1)", unicyclic_cm(3, &[1, 1, 1]).unwrap().0, 3),
        fx("C4(0,1,0,0)", unicyclic_cm(3, &[0, 1, 0, 0]).unwrap().0, 3),
        fx("X8,k3", x_n(8, 3).unwrap(), 3),
        fx("X9,k4", x_n(9, 4).unwrap(), 4),
        fx("G**,k3", g_star_star(3).unwrap(), 3),
        fx("G**,k4", g_star_star(4).unwrap(), 4),
        fx("P3,k3", path_p3(3).unwrap().0, 3),
        fx("P3,k4", path_p3(4).unwrap().0, 4),
        fx("hyperstar k3 s3", hyperstar(3, 3).unwrap(), 3),
        fx("hyperstar k4 s2", hyperstar(4, 2).unwrap(), 4),
    ];
    for n in 3..=6 {
        for k in 2..=n.min(4) {
            out.push(fx(format!("K{n}^{k}"), complete_uniform(n, k).unwrap(), k));
        }
    }
    out
}

/// Number of (u, v)-walks of length `s`, enumerated edge by edge: each step
/// picks an edge through the current vertex and a different vertex in it.
pub fn dfs_walks(h: &Hypergraph, u: usize, v: usize, s: usize) -> u64 {
    if s == 0 {
        return u64::from(u == v);
    }
    let mut total = 0;
    for e in h.edges() {
        if !e.contains(&u) {
            continue;
        }
        for &w in e {
            if w != u {
                total += dfs_walks(h, w, v, s - 1);
            }
        }
    }
    total
}

/// Pair-multiplicity adjacency counted directly from the edge list.
pub fn adjacency_oracle(h: &Hypergraph) -> Vec<Vec<i64>> {
    let n = h.n();
    let mut a = vec![vec![0i64; n]; n];
    for e in h.edges() {
        for &i in e {
            for &j in e {
                if i != j {
                    a[i][j] += 1;
                }
            }
        }
    }
    a
}

/// Characteristic polynomial `det(xI − A)` by Faddeev–LeVerrier in exact
/// integer arithmetic; coefficients from `x^n` down to `x^0`.
pub fn char_poly(a: &[Vec<i64>]) -> Vec<i128> {
    let n = a.len();
    let a: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mul = |x: &Vec<Vec<i128>>, y: &Vec<Vec<i128>>| -> Vec<Vec<i128>> {
        (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|l| x[i][l] * y[l][j]).sum()).collect())
            .collect()
    };
    let mut coeffs = vec![1i128];
    let mut m = vec![vec![0i128; n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{k-1} I
        let mut next = mul(&a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += coeffs[k - 1];
        }
        m = next;
        let am = mul(&a, &m);
        let tr: i128 = (0..n).map(|i| am[i][i]).sum();
        assert_eq!(tr % k as i128, 0, "Faddeev–LeVerrier division must be exact");
        coeffs.push(-tr / k as i128);
    }
    coeffs
}

/// Exact division of integer polynomials (leading coefficient first);
/// `None` when `divisor` does not divide `p`.
pub fn poly_div(p: &[i128], divisor: &[i128]) -> Option<Vec<i128>> {
    let mut rem = p.to_vec();
    let d = divisor.len();
    if d > rem.len() {
        return None;
    }
    let mut q = Vec::with_capacity(rem.len() + 1 - d);
    for i in 0..=rem.len() - d {
        if rem[i] % divisor[0] != 0 {
            return None;
        }
        let c = rem[i] / divisor[0];
        for (j, &dj) in divisor.iter().enumerate() {
            rem[i + j] -= c * dj;
        }
        q.push(c);
    }
    rem.iter().all(|&x| x == 0).then_some(q)
}

/// Divides out `factors` one after another and checks that nothing is left.
pub fn factors_exactly(p: &[i128], factors: &[&[i128]]) -> bool {
    let mut rest = p.to_vec();
    for f in factors {
        match poly_div(&rest, f) {
            Some(q) => rest = q,
            None => return false,
        }
    }
    rest == [1]
}

pub fn random_uniform_seeded(n: usize, k: usize, p: f64, rng: &mut rand_chacha::ChaCha8Rng) -> Hypergraph {
    hyperee::families::random_uniform(n, k, p, rng).unwrap()
}

pub fn rel_close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs()).max(1.0)
}
