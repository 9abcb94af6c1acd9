//! Brute-force oracles shared by the integration tests. Nothing here calls the
//! solvers under test; everything is plain enumeration.
#![allow(dead_code)]

use rand::Rng;
use recolour::{Colouring, Graph};

/// Every labelled graph on `n` vertices, indexed by a bitmask over the pairs.
pub fn labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let total = 1u64 << pairs.len();
    (0..total).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        Graph::from_edges(n, edges).unwrap()
    })
}

pub fn random_graph(rng: &mut impl Rng, n: usize, density: f64) -> Graph {
    Graph::from_fn(n, |_, _| rng.gen_bool(density))
}

/// Random graph whose edge density is itself drawn from `[lo, hi)`.
pub fn random_graph_between(rng: &mut impl Rng, n: usize, lo: f64, hi: f64) -> Graph {
    let density = rng.gen_range(lo..hi);
    random_graph(rng, n, density)
}

/// All maps V -> {1..k}, proper or not, in lexicographic order.
pub fn all_assignments(n: usize, k: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (1..=k).map(move |c| {
                    let mut next = prefix.clone();
                    next.push(c);
                    next
                })
            })
            .collect();
    }
    out
}

pub fn proper(g: &Graph, a: &[u32]) -> bool {
    g.edges().all(|(u, v)| a[u] != a[v])
}

pub fn proper_colourings(g: &Graph, k: u32) -> Vec<Colouring> {
    all_assignments(g.n(), k)
        .into_iter()
        .filter(|a| proper(g, a))
        .map(|a| Colouring::new(k, a).unwrap())
        .collect()
}

/// Frozen by definition: every colour shows up in every closed neighbourhood.
pub fn frozen(g: &Graph, a: &[u32], k: u32) -> bool {
    (0..g.n()).all(|v| {
        let mut seen = vec![false; k as usize + 1];
        seen[a[v] as usize] = true;
        for u in 0..g.n() {
            if g.has_edge(u, v) {
                seen[a[u] as usize] = true;
            }
        }
        seen[1..].iter().all(|&s| s)
    })
}

/// Smallest k with a proper k-colouring.
pub fn chromatic_brute(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    (1..=g.n() as u32)
        .find(|&k| colourable_brute(g, k))
        .unwrap() as usize
}

/// Index-order backtracking, vertex 0 pinned to colour 1.
pub fn colourable_brute(g: &Graph, k: u32) -> bool {
    fn go(g: &Graph, k: u32, a: &mut Vec<u32>) -> bool {
        let v = a.len();
        if v == g.n() {
            return true;
        }
        let top = if v == 0 { 1 } else { k };
        for c in 1..=top {
            if (0..v).all(|u| !g.has_edge(u, v) || a[u] != c) {
                a.push(c);
                if go(g, k, a) {
                    return true;
                }
                a.pop();
            }
        }
        false
    }
    g.n() == 0 || go(g, k, &mut Vec::new())
}

/// Largest clique size over all vertex subsets (n up to about 20).
pub fn clique_brute(g: &Graph) -> usize {
    let n = g.n();
    let mut best = 0;
    for mask in 0u32..1 << n {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v))) {
            best = size;
        }
    }
    best
}

/// Ordered tuples of distinct vertices whose induced graph is `pattern` under the identity map.
pub fn has_induced_brute(g: &Graph, pattern: &Graph) -> bool {
    fn go(g: &Graph, p: &Graph, chosen: &mut Vec<usize>) -> bool {
        let i = chosen.len();
        if i == p.n() {
            return true;
        }
        for v in 0..g.n() {
            if chosen.contains(&v) {
                continue;
            }
            if chosen.iter().enumerate().all(|(j, &u)| g.has_edge(u, v) == p.has_edge(j, i)) {
                chosen.push(v);
                if go(g, p, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    pattern.n() <= g.n() && go(g, pattern, &mut Vec::new())
}

/// Component label per colouring: index of the smallest member, by repeated flooding.
pub fn components_brute(nodes: &[Colouring]) -> Vec<usize> {
    let adjacent = |a: &Colouring, b: &Colouring| {
        a.assignment().iter().zip(b.assignment()).filter(|(x, y)| x != y).count() == 1
    };
    let mut label = vec![usize::MAX; nodes.len()];
    for s in 0..nodes.len() {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = s;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for y in 0..nodes.len() {
                if label[y] == usize::MAX && adjacent(&nodes[x], &nodes[y]) {
                    label[y] = s;
                    stack.push(y);
                }
            }
        }
    }
    label
}

pub fn two_k2() -> Graph {
    Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap()
}
