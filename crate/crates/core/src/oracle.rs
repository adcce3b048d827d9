//! Classical index-based disjoint-set forest, used as the independent
//! oracle for cross-validation.
//!
//! Nothing in this module touches the relation machinery: traversal,
//! arithmetic and the partition view are all plain array code, so agreement
//! with the relational programs is evidence rather than tautology.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// Which parent rewrite a find performs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FindStrategy {
    /// Follow parents only; no mutation.
    Naive,
    /// Two passes: find the root, then point every visited node at it.
    Compress,
    /// One pass: point every visited node at its grandparent.
    Split,
    /// One pass: point every second visited node at its grandparent.
    Halve,
}

impl FindStrategy {
    pub const ALL: [FindStrategy; 4] = [
        FindStrategy::Naive,
        FindStrategy::Compress,
        FindStrategy::Split,
        FindStrategy::Halve,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FindStrategy::Naive => "naive",
            FindStrategy::Compress => "compress",
            FindStrategy::Split => "split",
            FindStrategy::Halve => "halve",
        }
    }
}

impl fmt::Display for FindStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FindStrategy {
    type Err = String;

    fn from_str(s: &str) -> Result<FindStrategy, String> {
        FindStrategy::ALL
            .into_iter()
            .find(|st| st.as_str() == s)
            .ok_or_else(|| format!("unknown strategy {s:?} (expected naive|compress|split|halve)"))
    }
}

/// Parent and rank arrays; parent\[i\] == i marks a root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleForest {
    parent: Vec<usize>,
    rank: Vec<usize>,
}

impl OracleForest {
    /// All elements in singleton sets with rank zero.
    pub fn new(n: usize) -> OracleForest {
        OracleForest {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    /// Builds from an explicit parent array; chains must reach a self-loop.
    pub fn from_parents(parent: Vec<usize>, rank: Vec<usize>) -> OracleForest {
        assert_eq!(parent.len(), rank.len());
        let f = OracleForest { parent, rank };
        for i in 0..f.len() {
            f.root_no_mutation(i);
        }
        f
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn parents(&self) -> &[usize] {
        &self.parent
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    pub fn max_rank(&self) -> usize {
        self.rank.iter().copied().max().unwrap_or(0)
    }

    fn root_no_mutation(&self, mut i: usize) -> usize {
        for _ in 0..=self.len() {
            let p = self.parent[i];
            if p == i {
                return i;
            }
            i = p;
        }
        panic!("parent chain does not terminate; not a forest");
    }

    /// Finds the root of i, rewriting parents according to the strategy.
    pub fn find(&mut self, i: usize, strategy: FindStrategy) -> usize {
        assert!(i < self.len(), "node {i} out of range");
        match strategy {
            FindStrategy::Naive => self.root_no_mutation(i),
            FindStrategy::Compress => {
                let root = self.root_no_mutation(i);
                let mut w = i;
                while self.parent[w] != root {
                    let t = w;
                    w = self.parent[w];
                    self.parent[t] = root;
                }
                root
            }
            FindStrategy::Split => {
                let mut y = i;
                while self.parent[y] != y {
                    let t = self.parent[y];
                    self.parent[y] = self.parent[self.parent[y]];
                    y = t;
                }
                y
            }
            FindStrategy::Halve => {
                let mut y = i;
                while self.parent[y] != y {
                    self.parent[y] = self.parent[self.parent[y]];
                    y = self.parent[y];
                }
                y
            }
        }
    }

    /// Joins the sets of i and j. Finds always run with full compression,
    /// mirroring the relational union. Without ranks the root of i's tree
    /// goes below the root of j's tree; with ranks the smaller-rank root
    /// goes below and ties increment the surviving root.
    pub fn union(&mut self, i: usize, j: usize, by_rank: bool) {
        assert!(i < self.len() && j < self.len(), "node out of range");
        let r = self.find(i, FindStrategy::Compress);
        let s = self.find(j, FindStrategy::Compress);
        if !by_rank {
            self.parent[r] = s;
            return;
        }
        if r == s {
            return;
        }
        if self.rank[r] < self.rank[s] {
            self.parent[r] = s;
        } else {
            self.parent[s] = r;
            if self.rank[r] == self.rank[s] {
                self.rank[r] += 1;
            }
        }
    }

    /// The partition currently represented, without mutating parents.
    pub fn partition(&self) -> Partition {
        let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        let roots: Vec<usize> = (0..self.len()).map(|i| self.root_no_mutation(i)).collect();
        // canonical key: the minimum element of each class
        let mut keys: BTreeMap<usize, usize> = BTreeMap::new();
        for (i, &root) in roots.iter().enumerate() {
            let key = keys.entry(root).or_insert(i);
            classes.entry(*key).or_default().push(i);
        }
        Partition { classes }
    }
}

/// Canonical set-of-sets view of a universe; classes are keyed by their
/// minimum element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    classes: BTreeMap<usize, Vec<usize>>,
}

impl Partition {
    pub fn from_classes(classes: Vec<Vec<usize>>) -> Partition {
        let mut map = BTreeMap::new();
        for mut class in classes {
            class.sort_unstable();
            assert!(!class.is_empty(), "empty class");
            let prev = map.insert(class[0], class);
            assert!(prev.is_none(), "classes overlap");
        }
        Partition { classes: map }
    }

    pub fn classes(&self) -> impl Iterator<Item = &[usize]> {
        self.classes.values().map(|c| c.as_slice())
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn same_class(&self, i: usize, j: usize) -> bool {
        self.classes
            .values()
            .any(|c| c.binary_search(&i).is_ok() && c.binary_search(&j).is_ok())
    }
}

impl fmt::Display for Partition {
    /// Deterministic rendering: classes by minimum element, elements sorted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first_class = true;
        for class in self.classes.values() {
            if !first_class {
                write!(f, " ")?;
            }
            first_class = false;
            write!(f, "{{")?;
            for (k, e) in class.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compress_flattens() {
        let mut f = OracleForest::from_parents(vec![1, 2, 2], vec![0, 0, 0]);
        let root = f.find(0, FindStrategy::Compress);
        assert_eq!(root, 2);
        assert_eq!(f.parents(), &[2, 2, 2]);
    }

    #[test]
    fn naive_does_not_mutate() {
        let mut f = OracleForest::from_parents(vec![1, 2, 2], vec![0, 0, 0]);
        assert_eq!(f.find(0, FindStrategy::Naive), 2);
        assert_eq!(f.parents(), &[1, 2, 2]);
    }

    #[test]
    fn find_on_root_never_mutates() {
        for strategy in FindStrategy::ALL {
            let mut f = OracleForest::from_parents(vec![1, 2, 2], vec![0, 0, 0]);
            assert_eq!(f.find(2, strategy), 2);
            assert_eq!(f.parents(), &[1, 2, 2]);
        }
    }

    #[test]
    fn split_and_halve_on_five_chain() {
        let chain = vec![1, 2, 3, 4, 4];
        let mut f = OracleForest::from_parents(chain.clone(), vec![0; 5]);
        assert_eq!(f.find(0, FindStrategy::Split), 4);
        assert_eq!(f.parents(), &[2, 3, 4, 4, 4]);

        let mut f = OracleForest::from_parents(chain, vec![0; 5]);
        assert_eq!(f.find(0, FindStrategy::Halve), 4);
        assert_eq!(f.parents(), &[2, 2, 4, 4, 4]);
    }

    #[test]
    fn union_links_and_ranks() {
        let mut f = OracleForest::new(4);
        f.union(0, 1, true);
        // equal ranks: the else-branch puts s below r
        assert_eq!(f.parents()[1], 0);
        assert_eq!(f.ranks()[0], 1);

        // union within one set changes nothing
        let before = f.clone();
        f.union(0, 1, true);
        assert_eq!(f, before);

        // without ranks, root of i goes below root of j
        let mut g = OracleForest::new(2);
        g.union(0, 1, false);
        assert_eq!(g.parents(), &[1, 1]);
    }

    #[test]
    fn ranks_stay_small_under_random_unions() {
        use rand::Rng;
        use rand_chacha::rand_core::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        let n = 64;
        let mut f = OracleForest::new(n);
        for _ in 0..1000 {
            let i = rng.random_range(0..n);
            let j = rng.random_range(0..n);
            f.union(i, j, true);
        }
        assert!(f.max_rank() < n);
        // rank is a logarithmic bound on tree height
        assert!(f.max_rank() <= 6);
    }

    #[test]
    fn partition_view() {
        let f = OracleForest::from_parents(vec![1, 1, 2], vec![0, 0, 0]);
        let part = f.partition();
        assert_eq!(part.to_string(), "{0,1} {2}");
        assert!(part.same_class(0, 1));
        assert!(!part.same_class(0, 2));
        assert_eq!(part.class_count(), 2);
    }

    #[test]
    #[should_panic(expected = "not a forest")]
    fn cyclic_parents_rejected() {
        let _ = OracleForest::from_parents(vec![1, 0], vec![0, 0]);
    }
}
