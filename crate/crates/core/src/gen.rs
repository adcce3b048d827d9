//! Seeded samplers and small-universe enumerators for the operand classes
//! the law suites quantify over.
//!
//! Classes like points, mappings and forests are exponentially rare among
//! all relations, so each gets a dedicated sampler instead of rejection
//! over random matrices. Forests are drawn uniformly via the bijection with
//! labelled trees on one extra node.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::relation::Relation;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn relation(rng: &mut ChaCha8Rng, n: usize) -> Relation {
    Relation::from_fn(n, |_, _| rng.random::<bool>())
}

pub fn vector(rng: &mut ChaCha8Rng, n: usize) -> Relation {
    let members: Vec<usize> = (0..n).filter(|_| rng.random::<bool>()).collect();
    Relation::vector(n, &members)
}

pub fn nonempty_vector(rng: &mut ChaCha8Rng, n: usize) -> Relation {
    let mut members: Vec<usize> = (0..n).filter(|_| rng.random::<bool>()).collect();
    if members.is_empty() {
        members.push(rng.random_range(0..n));
    }
    Relation::vector(n, &members)
}

pub fn point(rng: &mut ChaCha8Rng, n: usize) -> Relation {
    Relation::point(n, rng.random_range(0..n))
}

/// ⊥ or a point: exactly the injective vectors.
pub fn injective_vector(rng: &mut ChaCha8Rng, n: usize) -> Relation {
    if rng.random::<bool>() {
        Relation::bot(n)
    } else {
        point(rng, n)
    }
}

pub fn arc(rng: &mut ChaCha8Rng, n: usize) -> Relation {
    Relation::from_pairs(n, &[(rng.random_range(0..n), rng.random_range(0..n))])
}

/// Each row maps to exactly one column.
pub fn mapping(rng: &mut ChaCha8Rng, n: usize) -> Relation {
    let targets: Vec<usize> = (0..n).map(|_| rng.random_range(0..n)).collect();
    Relation::from_successor_array(&targets)
}

/// Each row maps to at most one column.
pub fn univalent(rng: &mut ChaCha8Rng, n: usize) -> Relation {
    Relation::from_fn(n, {
        let choices: Vec<Option<usize>> = (0..n)
            .map(|_| {
                let c = rng.random_range(0..=n);
                (c < n).then_some(c)
            })
            .collect();
        move |i, j| choices[i] == Some(j)
    })
}

/// Each column holds at most one row.
pub fn injective(rng: &mut ChaCha8Rng, n: usize) -> Relation {
    let choices: Vec<Option<usize>> = (0..n)
        .map(|_| {
            let r = rng.random_range(0..=n);
            (r < n).then_some(r)
        })
        .collect();
    Relation::from_fn(n, move |i, j| choices[j] == Some(i))
}

/// Random relation with every row nonempty.
pub fn total(rng: &mut ChaCha8Rng, n: usize) -> Relation {
    let mut r = relation(rng, n);
    for i in 0..n {
        if (0..n).all(|j| !r.get(i, j)) {
            r = r.join(&Relation::from_pairs(n, &[(i, rng.random_range(0..n))]));
        }
    }
    r
}

/// Random relation with every column nonempty.
pub fn surjective(rng: &mut ChaCha8Rng, n: usize) -> Relation {
    let mut r = relation(rng, n);
    for j in 0..n {
        if (0..n).all(|i| !r.get(i, j)) {
            r = r.join(&Relation::from_pairs(n, &[(rng.random_range(0..n), j)]));
        }
    }
    r
}

/// Injective and surjective: every column held by exactly one row.
pub fn bijective(rng: &mut ChaCha8Rng, n: usize) -> Relation {
    let owners: Vec<usize> = (0..n).map(|_| rng.random_range(0..n)).collect();
    Relation::from_fn(n, move |i, j| owners[j] == i)
}

/// Random subset of the diagonal.
pub fn partial_identity(rng: &mut ChaCha8Rng, n: usize) -> Relation {
    Relation::from_fn(n, |i, j| i == j && rng.random::<bool>())
}

/// Random partial injection: univalent and injective.
pub fn injective_univalent(rng: &mut ChaCha8Rng, n: usize) -> Relation {
    let perm = random_permutation(rng, n);
    let keep: Vec<bool> = (0..n).map(|_| rng.random::<bool>()).collect();
    Relation::from_fn(n, move |i, j| perm[j] == i && keep[j])
}

/// Random relation at roughly quarter density.
pub fn sparse(rng: &mut ChaCha8Rng, n: usize) -> Relation {
    Relation::from_fn(n, |_, _| rng.random::<bool>() && rng.random::<bool>())
}

/// Relation whose non-loop part is acyclic: off-diagonal edges respect a
/// random topological order, the diagonal is arbitrary.
pub fn loopy_acyclic(rng: &mut ChaCha8Rng, n: usize) -> Relation {
    let order = random_permutation(rng, n);
    Relation::from_fn(n, |i, j| {
        if i == j {
            rng.random::<bool>()
        } else {
            order[i] < order[j] && rng.random::<bool>()
        }
    })
}

/// Univalent relation whose non-loop part is acyclic: each row maps to
/// nothing, itself, or a strictly later node in a random order.
pub fn loopy_acyclic_univalent(rng: &mut ChaCha8Rng, n: usize) -> Relation {
    let order = random_permutation(rng, n);
    let choices: Vec<Option<usize>> = (0..n)
        .map(|i| {
            let later: Vec<usize> = (0..n)
                .filter(|&j| j == i || order[i] < order[j])
                .collect();
            let pick = rng.random_range(0..=later.len());
            (pick < later.len()).then(|| later[pick])
        })
        .collect();
    Relation::from_fn(n, move |i, j| choices[i] == Some(j))
}

fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.random_range(0..=i));
    }
    perm
}

/// Uniform disjoint-set forest: a mapping whose non-loop part is acyclic.
///
/// Forests on n nodes correspond to labelled trees on n+1 nodes (attach
/// every root to one auxiliary node), so decoding a uniform Prüfer sequence
/// and reading parents towards the auxiliary node samples uniformly.
pub fn forest(rng: &mut ChaCha8Rng, n: usize) -> Relation {
    if n == 1 {
        return Relation::identity(1);
    }
    let m = n + 1;
    let seq: Vec<usize> = (0..m - 2).map(|_| rng.random_range(0..m)).collect();
    let edges = prufer_decode(m, &seq);
    parents_toward(n, n, &edges)
}

fn prufer_decode(m: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; m];
    for &s in seq {
        degree[s] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> = (0..m)
        .filter(|&v| degree[v] == 1)
        .map(Reverse)
        .collect();
    let mut edges = Vec::with_capacity(m - 1);
    for &s in seq {
        let Reverse(leaf) = leaves.pop().expect("valid sequence");
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.push(Reverse(s));
        }
    }
    let Reverse(u) = leaves.pop().expect("two nodes remain");
    let Reverse(v) = leaves.pop().expect("two nodes remain");
    edges.push((u, v));
    edges
}

fn parents_toward(n: usize, aux: usize, edges: &[(usize, usize)]) -> Relation {
    let mut adj = vec![Vec::new(); aux + 1];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut parents = vec![usize::MAX; aux + 1];
    let mut stack = vec![aux];
    parents[aux] = aux;
    while let Some(u) = stack.pop() {
        for &v in &adj[u] {
            if parents[v] == usize::MAX {
                parents[v] = if u == aux { v } else { u };
                stack.push(v);
            }
        }
    }
    Relation::from_successor_array(&parents[..n])
}

/// Random subrelation of `r`.
pub fn subrelation(rng: &mut ChaCha8Rng, r: &Relation) -> Relation {
    r.meet(&relation(rng, r.size()))
}

// --- exhaustive enumerators for small universes ---

/// Every relation on an `n`-element universe. Only feasible for n ≤ 4.
pub fn all_relations(n: usize) -> Vec<Relation> {
    assert!(n <= 4, "all_relations is exponential; n = {n} is too large");
    let cells = n * n;
    (0u64..1 << cells)
        .map(|code| Relation::from_fn(n, |i, j| code >> (i * n + j) & 1 == 1))
        .collect()
}

pub fn all_vectors(n: usize) -> Vec<Relation> {
    (0u64..1 << n)
        .map(|code| {
            let members: Vec<usize> = (0..n).filter(|&i| code >> i & 1 == 1).collect();
            Relation::vector(n, &members)
        })
        .collect()
}

pub fn all_points(n: usize) -> Vec<Relation> {
    (0..n).map(|i| Relation::point(n, i)).collect()
}

/// Every parent array on `n` nodes, i.e. every mapping.
pub fn all_parent_arrays(n: usize) -> Vec<Vec<usize>> {
    let count = n.pow(n as u32);
    let mut out = Vec::with_capacity(count);
    for mut code in 0..count {
        let mut parents = vec![0usize; n];
        for slot in parents.iter_mut() {
            *slot = code % n;
            code /= n;
        }
        out.push(parents);
    }
    out
}

/// Whether every parent chain reaches a self-loop within n steps.
pub fn parent_array_is_forest(parents: &[usize]) -> bool {
    let n = parents.len();
    (0..n).all(|start| {
        let mut node = start;
        for _ in 0..n {
            let next = parents[node];
            if next == node {
                return true;
            }
            node = next;
        }
        false
    })
}

/// All disjoint-set forests on `n` nodes; there are (n+1)^(n-1) of them.
pub fn all_forests(n: usize) -> Vec<Relation> {
    all_parent_arrays(n)
        .into_iter()
        .filter(|p| parent_array_is_forest(p))
        .map(|p| Relation::from_successor_array(&p))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify;

    #[test]
    fn samplers_hit_their_classes() {
        let mut rng = rng_from_seed(42);
        for n in 1..=6 {
            for _ in 0..50 {
                assert!(classify::is_vector(&vector(&mut rng, n)));
                assert!(classify::is_point(&point(&mut rng, n)));
                assert!(classify::is_arc(&arc(&mut rng, n)));
                assert!(classify::is_mapping(&mapping(&mut rng, n)));
                assert!(classify::is_univalent(&univalent(&mut rng, n)));
                assert!(classify::is_injective(&injective(&mut rng, n)));
                assert!(classify::is_total(&total(&mut rng, n)));
                assert!(classify::is_surjective(&surjective(&mut rng, n)));
                assert!(classify::is_bijective(&bijective(&mut rng, n)));
                assert!(classify::is_forest(&forest(&mut rng, n)));
                assert!(!nonempty_vector(&mut rng, n).is_empty());
                let v = injective_vector(&mut rng, n);
                assert!(classify::is_vector(&v) && classify::is_injective(&v));
                let pi = injective_univalent(&mut rng, n);
                assert!(classify::is_injective(&pi) && classify::is_univalent(&pi));
                let la = loopy_acyclic(&mut rng, n);
                assert!(classify::is_acyclic(
                    &la.difference(&Relation::identity(n))
                ));
            }
        }
    }

    #[test]
    fn forest_counts_match_cayley() {
        // (n+1)^(n-1) forests on n nodes
        assert_eq!(all_forests(1).len(), 1);
        assert_eq!(all_forests(2).len(), 3);
        assert_eq!(all_forests(3).len(), 16);
        assert_eq!(all_forests(4).len(), 125);
    }

    #[test]
    fn enumerators_sizes() {
        assert_eq!(all_relations(2).len(), 16);
        assert_eq!(all_relations(3).len(), 512);
        assert_eq!(all_vectors(4).len(), 16);
        assert_eq!(all_points(5).len(), 5);
        assert_eq!(all_parent_arrays(3).len(), 27);
    }

    #[test]
    fn forest_sampler_reaches_every_forest_at_n3() {
        // crude coverage check on the uniform sampler
        let mut rng = rng_from_seed(7);
        let all = all_forests(3);
        let mut seen = vec![false; all.len()];
        for _ in 0..2000 {
            let f = forest(&mut rng, 3);
            let idx = all.iter().position(|g| *g == f).expect("sampler stays in class");
            seen[idx] = true;
        }
        assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn seeded_rng_is_reproducible() {
        let mut a = rng_from_seed(123);
        let mut b = rng_from_seed(123);
        for n in 1..=5 {
            assert_eq!(relation(&mut a, n), relation(&mut b, n));
            assert_eq!(forest(&mut a, n), forest(&mut b, n));
        }
    }
}
