//! The bridge between the relational world and the index world: partition
//! abstraction and the lifts of parent and rank arrays to relations.

use crate::classify::is_forest;
use crate::components::fc;
use crate::error::RelationError;
use crate::oracle::{OracleForest, Partition};
use crate::relation::Relation;

/// Groups the nodes of a forest by their root. One reachability closure
/// serves all nodes; the result agrees with `root_of` applied pointwise.
pub fn abstract_forest(p: &Relation) -> Result<Partition, RelationError> {
    if !is_forest(p) {
        return Err(RelationError::NotAForest);
    }
    let n = p.size();
    let reach = p.star();
    let mut by_root: std::collections::BTreeMap<usize, Vec<usize>> =
        std::collections::BTreeMap::new();
    for i in 0..n {
        let root = (0..n)
            .find(|&j| reach.get(i, j) && p.get(j, j))
            .expect("every node of a forest reaches a root");
        by_root.entry(root).or_default().push(i);
    }
    Ok(Partition::from_classes(by_root.into_values().collect()))
}

/// The equivalence relation of a partition: (i, j) related iff same class.
pub fn relational(part: &Partition, n: usize) -> Relation {
    Relation::from_fn(n, |i, j| part.same_class(i, j))
}

/// Parent array of an index forest as a relation.
pub fn lift_parents(f: &OracleForest) -> Relation {
    Relation::from_successor_array(f.parents())
}

/// Rank array of an index forest as a relation into the number carrier.
pub fn lift_ranks(f: &OracleForest) -> Relation {
    let pairs: Vec<(usize, usize)> = f
        .ranks()
        .iter()
        .enumerate()
        .map(|(i, &r)| (i, r))
        .collect();
    Relation::from_pairs(f.len(), &pairs)
}

/// fc(p) viewed through the partition and back is fc(p) again.
pub fn fc_equals_partition_relation(p: &Relation) -> Result<bool, RelationError> {
    let part = abstract_forest(p)?;
    Ok(fc(p) == relational(&part, p.size()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::components::root_of;
    use crate::gen::all_forests;

    #[test]
    fn identity_gives_singletons() {
        let part = abstract_forest(&Relation::identity(3)).unwrap();
        assert_eq!(part.to_string(), "{0} {1} {2}");
    }

    #[test]
    fn chain_groups_by_root() {
        let p = Relation::from_pairs(3, &[(0, 1), (1, 1), (2, 2)]);
        let part = abstract_forest(&p).unwrap();
        assert_eq!(part.to_string(), "{0,1} {2}");
    }

    #[test]
    fn abstraction_agrees_with_root_of_on_all_forests_n4() {
        for p in all_forests(4) {
            let part = abstract_forest(&p).unwrap();
            for i in 0..4 {
                let root = root_of(&p, &Relation::point(4, i)).point_index().unwrap();
                assert!(part.same_class(i, root));
            }
        }
    }

    #[test]
    fn non_forest_rejected() {
        let cycle = Relation::from_pairs(2, &[(0, 1), (1, 0)]);
        assert!(abstract_forest(&cycle).is_err());
    }

    #[test]
    fn fc_round_trip_on_all_forests_n4() {
        for p in all_forests(4) {
            assert!(fc_equals_partition_relation(&p).unwrap());
        }
    }

    #[test]
    fn lifts() {
        let f = OracleForest::from_parents(vec![1, 1, 2], vec![0, 1, 0]);
        assert_eq!(
            lift_parents(&f),
            Relation::from_pairs(3, &[(0, 1), (1, 1), (2, 2)])
        );
        assert_eq!(
            lift_ranks(&f),
            Relation::from_pairs(3, &[(0, 0), (1, 1), (2, 0)])
        );
    }
}
