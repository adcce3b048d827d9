//! Binary relations over a fixed finite universe, stored as bit-packed
//! Boolean matrices. Row `i` holds the successors of element `i`.
//!
//! Values are immutable: every operation returns a fresh relation and never
//! mutates its inputs. All operations require equal universe sizes and panic
//! on mismatch; sizes are validated once at construction and parse time.

use std::fmt;
use std::str::FromStr;

use crate::error::RelationError;

/// Largest supported universe. Law suites run far below this; the cap keeps
/// accidental quadratic blowups diagnosable.
pub const MAX_UNIVERSE: usize = 256;

const WORD_BITS: usize = 64;

/// An `n`×`n` Boolean matrix; the single carrier for arrays, vectors,
/// points, forests and numbers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    n: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl Relation {
    fn empty(n: usize) -> Result<Relation, RelationError> {
        if n == 0 || n > MAX_UNIVERSE {
            return Err(RelationError::InvalidUniverse(n));
        }
        let words_per_row = n.div_ceil(WORD_BITS);
        Ok(Relation {
            n,
            words_per_row,
            bits: vec![0; n * words_per_row],
        })
    }

    /// The empty relation ⊥ of size `n`.
    pub fn bot(n: usize) -> Relation {
        Self::try_bot(n).expect("universe size out of range")
    }

    pub fn try_bot(n: usize) -> Result<Relation, RelationError> {
        Self::empty(n)
    }

    /// The universal relation ⊤ of size `n`.
    pub fn top(n: usize) -> Relation {
        let mut r = Relation::bot(n);
        let full = full_row_mask(n, r.words_per_row);
        for i in 0..n {
            let row = r.row_mut(i);
            row.copy_from_slice(&full);
        }
        r
    }

    /// The identity relation 1 of size `n`.
    pub fn identity(n: usize) -> Relation {
        let mut r = Relation::bot(n);
        for i in 0..n {
            r.set(i, i, true);
        }
        r
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Relation {
        let mut r = Relation::bot(n);
        for &(i, j) in pairs {
            r.set(i, j, true);
        }
        r
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Relation {
        let mut r = Relation::bot(n);
        for i in 0..n {
            for j in 0..n {
                if f(i, j) {
                    r.set(i, j, true);
                }
            }
        }
        r
    }

    /// The point for element `i`: row `i` filled, all other rows empty.
    pub fn point(n: usize, i: usize) -> Relation {
        assert!(i < n, "point index {i} out of range for universe {n}");
        let mut r = Relation::bot(n);
        let full = full_row_mask(n, r.words_per_row);
        r.row_mut(i).copy_from_slice(&full);
        r
    }

    /// The vector for a set of elements: each listed row filled.
    pub fn vector(n: usize, members: &[usize]) -> Relation {
        let mut r = Relation::bot(n);
        let full = full_row_mask(n, r.words_per_row);
        for &i in members {
            assert!(i < n, "vector member {i} out of range for universe {n}");
            r.row_mut(i).copy_from_slice(&full);
        }
        r
    }

    /// Lifts an index-level parent array to the relation {(i, parent\[i\])}.
    pub fn from_successor_array(parents: &[usize]) -> Relation {
        let n = parents.len();
        let mut r = Relation::bot(n);
        for (i, &p) in parents.iter().enumerate() {
            r.set(i, p, true);
        }
        r
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.n && j < self.n);
        let w = self.bits[i * self.words_per_row + j / WORD_BITS];
        w >> (j % WORD_BITS) & 1 == 1
    }

    fn set(&mut self, i: usize, j: usize, value: bool) {
        let idx = i * self.words_per_row + j / WORD_BITS;
        let mask = 1u64 << (j % WORD_BITS);
        if value {
            self.bits[idx] |= mask;
        } else {
            self.bits[idx] &= !mask;
        }
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words_per_row..(i + 1) * self.words_per_row]
    }

    fn row_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.bits[i * self.words_per_row..(i + 1) * self.words_per_row]
    }

    fn assert_same_size(&self, other: &Relation) {
        assert_eq!(
            self.n, other.n,
            "relation size mismatch: {} vs {}",
            self.n, other.n
        );
    }

    /// Pointwise union x ⊔ y.
    pub fn join(&self, other: &Relation) -> Relation {
        self.assert_same_size(other);
        let mut out = self.clone();
        for (w, o) in out.bits.iter_mut().zip(&other.bits) {
            *w |= o;
        }
        out
    }

    /// Pointwise intersection x ⊓ y.
    pub fn meet(&self, other: &Relation) -> Relation {
        self.assert_same_size(other);
        let mut out = self.clone();
        for (w, o) in out.bits.iter_mut().zip(&other.bits) {
            *w &= o;
        }
        out
    }

    /// Pointwise complement ¬x.
    pub fn complement(&self) -> Relation {
        let mut out = self.clone();
        let full = full_row_mask(self.n, self.words_per_row);
        for i in 0..self.n {
            for (w, m) in out.row_mut(i).iter_mut().zip(&full) {
                *w = !*w & m;
            }
        }
        out
    }

    /// Difference x − y = x ⊓ ¬y.
    pub fn difference(&self, other: &Relation) -> Relation {
        self.assert_same_size(other);
        let mut out = self.clone();
        for (w, o) in out.bits.iter_mut().zip(&other.bits) {
            *w &= !o;
        }
        out
    }

    /// Containment x ⊑ y.
    pub fn leq(&self, other: &Relation) -> bool {
        self.assert_same_size(other);
        self.bits
            .iter()
            .zip(&other.bits)
            .all(|(w, o)| w & !o == 0)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    /// Relational composition x · y as a Boolean matrix product.
    pub fn compose(&self, other: &Relation) -> Relation {
        self.assert_same_size(other);
        let mut out = Relation::bot(self.n);
        for i in 0..self.n {
            for (wi, &word) in self.row(i).iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    let j = wi * WORD_BITS + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    let start = i * out.words_per_row;
                    for (k, &o) in other.row(j).iter().enumerate() {
                        out.bits[start + k] |= o;
                    }
                }
            }
        }
        out
    }

    /// Relational transposition xᵀ.
    pub fn transpose(&self) -> Relation {
        let mut out = Relation::bot(self.n);
        for i in 0..self.n {
            for (wi, &word) in self.row(i).iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    let j = wi * WORD_BITS + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    out.set(j, i, true);
                }
            }
        }
        out
    }

    /// Reflexive transitive closure x*, by squaring x ⊔ 1 to the fixpoint.
    pub fn star(&self) -> Relation {
        let mut r = self.join(&Relation::identity(self.n));
        loop {
            let next = r.compose(&r);
            if next == r {
                return r;
            }
            r = next;
        }
    }

    /// Transitive closure x⁺ = x · x*.
    pub fn plus(&self) -> Relation {
        self.compose(&self.star())
    }

    /// Number of pairs in the relation.
    pub fn pair_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for (wi, &word) in self.row(i).iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    let j = wi * WORD_BITS + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    out.push((i, j));
                }
            }
        }
        out
    }

    fn row_is_full(&self, i: usize) -> bool {
        let full = full_row_mask(self.n, self.words_per_row);
        self.row(i).iter().zip(&full).all(|(w, m)| w == m)
    }

    fn row_is_empty(&self, i: usize) -> bool {
        self.row(i).iter().all(|&w| w == 0)
    }

    /// Rows of a vector, i.e. the represented set. Errors unless every row
    /// is full or empty.
    pub fn vector_members(&self) -> Result<Vec<usize>, RelationError> {
        let mut members = Vec::new();
        for i in 0..self.n {
            if self.row_is_full(i) {
                members.push(i);
            } else if !self.row_is_empty(i) {
                return Err(RelationError::NotAVector);
            }
        }
        Ok(members)
    }

    /// The element represented by a point, or an error.
    pub fn point_index(&self) -> Result<usize, RelationError> {
        let members = self.vector_members().map_err(|_| RelationError::NotAPoint)?;
        match members.as_slice() {
            [i] => Ok(*i),
            _ => Err(RelationError::NotAPoint),
        }
    }
}

fn full_row_mask(n: usize, words_per_row: usize) -> Vec<u64> {
    let mut mask = vec![u64::MAX; words_per_row];
    let tail = n % WORD_BITS;
    if tail != 0 {
        mask[words_per_row - 1] = (1u64 << tail) - 1;
    }
    mask
}

/// Strictly monotone measure of a vector: the number of elements it holds.
pub fn down_count(v: &Relation) -> Result<u64, RelationError> {
    Ok(v.vector_members()?.len() as u64)
}

/// The point for the lowest-index element of a nonempty vector.
///
/// Deterministic on purpose: any element would satisfy the two axioms
/// (the result is a point and lies below the input), but a fixed rule keeps
/// program traces reproducible.
pub fn choose_point(v: &Relation) -> Result<Relation, RelationError> {
    let members = v.vector_members()?;
    match members.first() {
        Some(&i) => Ok(Relation::point(v.size(), i)),
        None => Err(RelationError::EmptyVector),
    }
}

/// |v| ≤ |w| for vectors, decided by comparing element counts.
///
/// Equivalent to the existence of an injective univalent `i` with
/// v ⊑ i · w; the brute-force witness search validating that equivalence
/// lives in the test suite.
pub fn cardinality_leq(v: &Relation, w: &Relation) -> Result<bool, RelationError> {
    let cv = v.vector_members()?.len();
    let cw = w.vector_members()?.len();
    Ok(cv <= cw)
}

impl fmt::Display for Relation {
    /// Text matrix format: first line the size, then one '0'/'1' line per row.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for i in 0..self.n {
            let mut line = String::with_capacity(self.n);
            for j in 0..self.n {
                line.push(if self.get(i, j) { '1' } else { '0' });
            }
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Relation(n={}, pairs={:?})", self.n, self.pairs())
    }
}

impl FromStr for Relation {
    type Err = RelationError;

    fn from_str(s: &str) -> Result<Relation, RelationError> {
        let parse_err = |line: usize, reason: &str| RelationError::Parse {
            line,
            reason: reason.to_string(),
        };
        let mut lines = s.split('\n');
        let header = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
        let n: usize = header
            .trim()
            .parse()
            .map_err(|_| parse_err(1, "first line must be the universe size"))?;
        let mut r = Relation::empty(n).map_err(|_| {
            parse_err(1, &format!("universe size must be in 1..={MAX_UNIVERSE}"))
        })?;
        for i in 0..n {
            let line = lines
                .next()
                .ok_or_else(|| parse_err(i + 2, "missing matrix row"))?;
            if line.len() != n {
                return Err(parse_err(i + 2, &format!("expected {n} characters")));
            }
            for (j, c) in line.chars().enumerate() {
                match c {
                    '0' => {}
                    '1' => r.set(i, j, true),
                    _ => return Err(parse_err(i + 2, "rows must contain only '0' and '1'")),
                }
            }
        }
        match (lines.next(), lines.next()) {
            (None, _) | (Some(""), None) => Ok(r),
            _ => Err(parse_err(n + 2, "trailing content after matrix")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain3() -> Relation {
        Relation::from_pairs(3, &[(0, 1), (1, 2)])
    }

    #[test]
    fn constants() {
        let id = Relation::identity(3);
        assert!(id.get(0, 0) && id.get(1, 1) && id.get(2, 2));
        assert_eq!(id.pair_count(), 3);
        assert!(Relation::bot(2).is_empty());
        assert_eq!(Relation::top(1).pairs(), vec![(0, 0)]);
    }

    #[test]
    fn universe_bounds() {
        assert_eq!(Relation::try_bot(0), Err(RelationError::InvalidUniverse(0)));
        assert!(Relation::try_bot(MAX_UNIVERSE).is_ok());
        assert_eq!(
            Relation::try_bot(MAX_UNIVERSE + 1),
            Err(RelationError::InvalidUniverse(MAX_UNIVERSE + 1))
        );
    }

    #[test]
    fn lattice_basics() {
        let x = chain3();
        assert_eq!(x.join(&Relation::bot(3)), x);
        assert_eq!(
            Relation::identity(2).complement(),
            Relation::from_pairs(2, &[(0, 1), (1, 0)])
        );
        assert!(x.leq(&Relation::top(3)));
        assert!(!Relation::top(3).leq(&x));
    }

    #[test]
    #[should_panic(expected = "size mismatch")]
    fn size_mismatch_panics() {
        let _ = Relation::bot(2).join(&Relation::bot(3));
    }

    #[test]
    fn compose_chain() {
        // oracle: enumerate all (a, c) with an intermediate b
        let x = chain3();
        let expected = Relation::from_fn(3, |a, c| (0..3).any(|b| x.get(a, b) && x.get(b, c)));
        assert_eq!(x.compose(&x), expected);
        assert_eq!(x.compose(&x).pairs(), vec![(0, 2)]);
        assert_eq!(x.compose(&Relation::identity(3)), x);
        assert_eq!(x.compose(&Relation::bot(3)), Relation::bot(3));
    }

    #[test]
    fn transpose_involution() {
        let x = Relation::from_pairs(3, &[(0, 2), (1, 1)]);
        assert_eq!(x.transpose().pairs(), vec![(1, 1), (2, 0)]);
        assert_eq!(x.transpose().transpose(), x);
        let id = Relation::identity(3);
        assert_eq!(id.transpose(), id);
    }

    // Independent closure oracle: join-compose iteration one step at a time.
    fn star_oracle(x: &Relation) -> Relation {
        let mut r = Relation::identity(x.size());
        loop {
            let next = r.join(&r.compose(x));
            if next == r {
                return r;
            }
            r = next;
        }
    }

    #[test]
    fn star_small_cases() {
        assert_eq!(Relation::bot(3).star(), Relation::identity(3));
        let x = chain3();
        assert_eq!(
            x.star(),
            Relation::from_pairs(3, &[(0, 0), (1, 1), (2, 2), (0, 1), (1, 2), (0, 2)])
        );
        assert_eq!(x.star(), star_oracle(&x));
    }

    #[test]
    fn star_matches_oracle_exhaustively_n2() {
        for code in 0u32..16 {
            let x = Relation::from_fn(2, |i, j| code >> (i * 2 + j) & 1 == 1);
            assert_eq!(x.star(), star_oracle(&x));
            assert!(x.plus().leq(&x.star()));
        }
    }

    #[test]
    fn vector_and_point_views() {
        let v = Relation::vector(3, &[1, 2]);
        assert_eq!(v.vector_members().unwrap(), vec![1, 2]);
        assert_eq!(down_count(&v).unwrap(), 2);
        assert_eq!(choose_point(&v).unwrap(), Relation::point(3, 1));
        assert_eq!(choose_point(&Relation::top(4)).unwrap(), Relation::point(4, 0));
        assert_eq!(Relation::point(3, 2).point_index().unwrap(), 2);

        assert_eq!(
            choose_point(&Relation::bot(3)),
            Err(RelationError::EmptyVector)
        );
        let not_vector = chain3();
        assert_eq!(down_count(&not_vector), Err(RelationError::NotAVector));
        assert_eq!(
            choose_point(&not_vector),
            Err(RelationError::NotAVector)
        );
        assert_eq!(Relation::vector(3, &[0, 1]).point_index(), Err(RelationError::NotAPoint));
    }

    #[test]
    fn down_count_bounds() {
        assert_eq!(down_count(&Relation::bot(5)).unwrap(), 0);
        assert_eq!(down_count(&Relation::top(5)).unwrap(), 5);
    }

    #[test]
    fn cardinality_by_counts() {
        let v = Relation::vector(3, &[0, 1]);
        let w = Relation::vector(3, &[1, 2]);
        assert!(cardinality_leq(&v, &w).unwrap());
        assert!(cardinality_leq(&Relation::bot(3), &w).unwrap());
        assert!(!cardinality_leq(&Relation::top(2), &Relation::vector(2, &[0])).unwrap());
        assert!(cardinality_leq(&chain3(), &w).is_err());
    }

    #[test]
    fn parse_print_round_trip() {
        let text = "3\n001\n010\n000\n";
        let r: Relation = text.parse().unwrap();
        assert_eq!(r.pairs(), vec![(0, 2), (1, 1)]);
        assert_eq!(r.to_string(), text);
    }

    #[test]
    fn parse_rejects_malformed_input() {
        assert!("".parse::<Relation>().is_err());
        assert!("x\n".parse::<Relation>().is_err());
        assert!("0\n".parse::<Relation>().is_err());
        assert!("2\n01\n".parse::<Relation>().is_err());
        assert!("2\n011\n00\n".parse::<Relation>().is_err());
        assert!("2\n0x\n00\n".parse::<Relation>().is_err());
        assert!("2\n00\n00\nextra\n".parse::<Relation>().is_err());
    }

    #[test]
    fn large_universe_word_boundaries() {
        // 65 and 128 elements exercise the multi-word row paths.
        for n in [65, 128] {
            let id = Relation::identity(n);
            assert_eq!(id.compose(&id), id);
            assert_eq!(id.complement().meet(&id), Relation::bot(n));
            assert_eq!(Relation::top(n).pair_count(), n * n);
            let chain = Relation::from_fn(n, |i, j| j == i + 1);
            assert_eq!(chain.star().pair_count(), n * (n + 1) / 2);
            assert_eq!(chain.transpose().transpose(), chain);
        }
    }
}
