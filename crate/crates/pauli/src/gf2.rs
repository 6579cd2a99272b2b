//! Dense GF(2) linear algebra on packed bit vectors: row echelon forms,
//! row-space membership, and linear-system solving.

use crate::bits::BitVec;

/// A row-echelon basis of a GF(2) row space.
///
/// Rows are kept fully reduced (each pivot column appears in exactly one
/// row), so membership testing is a single reduction pass.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<BitVec>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_rows<'a, I: IntoIterator<Item = &'a BitVec>>(ncols: usize, rows: I) -> Self {
        let mut e = Self::new(ncols);
        for r in rows {
            e.insert(r);
        }
        e
    }

    /// Adds a vector to the spanned space. Returns true if it enlarged the
    /// space (i.e. was independent of the rows so far).
    pub fn insert(&mut self, v: &BitVec) -> bool {
        assert_eq!(v.len(), self.ncols, "column count mismatch");
        let r = self.reduce(v);
        match r.first_one() {
            None => false,
            Some(p) => {
                // re-reduce existing rows so every pivot column stays unique
                for row in &mut self.rows {
                    if row.get(p) {
                        row.xor_assign(&r);
                    }
                }
                let idx = self.pivots.partition_point(|&q| q < p);
                self.rows.insert(idx, r);
                self.pivots.insert(idx, p);
                true
            }
        }
    }

    /// Reduces `v` by the stored rows, returning the residual.
    pub fn reduce(&self, v: &BitVec) -> BitVec {
        let mut r = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if r.get(p) {
                r.xor_assign(row);
            }
        }
        r
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }
}

/// Solves `A·x = b` over GF(2), where `rows` are the rows of `A` (each of
/// length `ncols`) and `b` is one bit per row. Returns the canonical
/// particular solution with all free variables set to zero, or `None` if
/// the system is inconsistent. Deterministic.
pub fn solve(ncols: usize, rows: &[BitVec], rhs: &[bool]) -> Option<BitVec> {
    assert_eq!(rows.len(), rhs.len(), "one right-hand bit per row required");
    // augmented rows: coefficient vector plus the rhs bit appended
    let mut aug: Vec<(BitVec, bool)> = rows.iter().cloned().zip(rhs.iter().copied()).collect();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; ncols];
    let mut next = 0usize;
    for col in 0..ncols {
        let Some(r) = (next..aug.len()).find(|&r| aug[r].0.get(col)) else {
            continue;
        };
        aug.swap(next, r);
        let (prow, pbit) = aug[next].clone();
        for (i, (row, bit)) in aug.iter_mut().enumerate() {
            if i != next && row.get(col) {
                row.xor_assign(&prow);
                *bit ^= pbit;
            }
        }
        pivot_of_col[col] = Some(next);
        next += 1;
    }
    // inconsistent iff a zero row has rhs 1
    if aug[next..].iter().any(|(row, bit)| row.is_zero() && *bit) {
        return None;
    }
    let mut x = BitVec::zeros(ncols);
    for col in 0..ncols {
        if let Some(r) = pivot_of_col[col] {
            x.set(col, aug[r].1);
        }
    }
    Some(x)
}

/// Solves `A·x = b` and returns the solution whose bit string is
/// lexicographically least (bit 0 most significant, 0 preferred).
pub fn solve_lex_min(ncols: usize, rows: &[BitVec], rhs: &[bool]) -> Option<BitVec> {
    solve(ncols, rows, rhs)?;
    let mut fixed_rows: Vec<BitVec> = rows.to_vec();
    let mut fixed_rhs: Vec<bool> = rhs.to_vec();
    let mut x = BitVec::zeros(ncols);
    for i in 0..ncols {
        // pin x_i = 0 by adding the constraint e_i · x = 0; if that breaks
        // feasibility the bit is forced to 1
        let mut unit = BitVec::zeros(ncols);
        unit.set(i, true);
        fixed_rows.push(unit);
        fixed_rhs.push(false);
        if solve(ncols, &fixed_rows, &fixed_rhs).is_none() {
            *fixed_rhs.last_mut().unwrap() = true;
            x.set(i, true);
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(bits: &[u8]) -> BitVec {
        BitVec::from_indices(
            bits.len(),
            bits.iter().enumerate().filter(|(_, &b)| b == 1).map(|(i, _)| i),
        )
    }

    #[test]
    fn echelon_rank_and_membership() {
        let mut e = Echelon::new(4);
        assert!(e.insert(&bv(&[1, 1, 0, 0])));
        assert!(e.insert(&bv(&[0, 1, 1, 0])));
        assert!(!e.insert(&bv(&[1, 0, 1, 0])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&bv(&[1, 0, 1, 0])));
        assert!(!e.contains(&bv(&[0, 0, 0, 1])));
    }

    #[test]
    fn solve_simple_system() {
        // x0 + x1 = 1, x1 + x2 = 0
        let rows = vec![bv(&[1, 1, 0]), bv(&[0, 1, 1])];
        let x = solve(3, &rows, &[true, false]).unwrap();
        assert!(x.get(0) ^ x.get(1));
        assert!(!(x.get(1) ^ x.get(2)));
    }

    #[test]
    fn solve_detects_inconsistency() {
        let rows = vec![bv(&[1, 1]), bv(&[1, 1])];
        assert!(solve(2, &rows, &[true, false]).is_none());
    }

    #[test]
    fn lex_min_prefers_low_zero_bits() {
        // single constraint x0 + x1 + x2 = 1: lex-min is (0,0,1)
        let rows = vec![bv(&[1, 1, 1])];
        let x = solve_lex_min(3, &rows, &[true]).unwrap();
        assert!(!x.get(0) && !x.get(1) && x.get(2));
    }
}
