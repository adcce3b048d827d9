//! Relational semantics of associative-array access.
//!
//! An array over the universe is a relation mapping indices to values;
//! update and lookup are plain algebra terms. Neither operation assumes the
//! index or value is a point, so whole sets of indices can be written at
//! once — the forest programs rely on exactly that.

use crate::relation::Relation;

/// x[y ↦ z] = (y ⊓ zᵀ) ⊔ (¬y ⊓ x): rows in y are updated to the value z,
/// all other rows keep their value from x.
pub fn awrite(x: &Relation, y: &Relation, z: &Relation) -> Relation {
    y.meet(&z.transpose()).join(&y.complement().meet(x))
}

/// x[y] = xᵀ · y: the value of x at index y; a vector whenever y is one.
pub fn aread(x: &Relation, y: &Relation) -> Relation {
    x.transpose().compose(y)
}
