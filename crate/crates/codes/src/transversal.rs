//! Certificates for transversal logical gates.
//!
//! `check_rp_transversality` verifies the divisibility criterion under
//! which R_p = diag(1, e^{2πi/2^p}) applied to one side of a qubit
//! bipartition and its inverse to the other side preserves the code
//! space: for every product G of m distinct X-type stabilizer
//! generators (1 ≤ m ≤ p), the two sides of the bipartition must
//! intersect supp(G) in sizes congruent mod 2^{p-m+1}.

use ccv_pauli::{PauliKind, StabilizerCode};

/// A violation witness: which generator subset failed and the two
/// intersection sizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RpViolation {
    /// Indices into the X-type generator list, ascending.
    pub generators: Vec<usize>,
    pub count_in_v: usize,
    pub count_in_complement: usize,
    /// The modulus 2^{p-m+1} that the counts disagree under.
    pub modulus: u64,
}

/// Checks whether R_p on `v` together with R_p^{-1} on the complement is
/// a logical gate for the code. `v` lists qubit indices (the complement
/// is every other qubit). Returns the first violation found, or `None`
/// when the criterion holds.
pub fn check_rp_transversality(
    code: &StabilizerCode,
    v: &[usize],
    p: u32,
) -> Option<RpViolation> {
    assert!(p >= 1, "p must be at least 1");
    let n = code.n();
    let mut in_v = vec![false; n];
    for &q in v {
        in_v[q] = true;
    }
    let x_gens: Vec<(usize, Vec<usize>)> = code
        .stab_gens()
        .iter()
        .zip(code.gen_tags())
        .enumerate()
        .filter(|(_, (_, tag))| tag.kind == PauliKind::X)
        .map(|(i, (g, _))| (i, g.support()))
        .collect();

    let mut chosen = Vec::new();
    subsets(&x_gens, &in_v, n, p, 1, 0, &mut chosen)
}

fn subsets(
    x_gens: &[(usize, Vec<usize>)],
    in_v: &[bool],
    n: usize,
    p: u32,
    m: u32,
    from: usize,
    chosen: &mut Vec<(usize, Vec<bool>)>,
) -> Option<RpViolation> {
    if m > p {
        return None;
    }
    for (idx, (gen_index, support)) in x_gens.iter().enumerate().skip(from) {
        // intersect the running support with this generator
        let mask: Vec<bool> = match chosen.last() {
            None => {
                let mut mask = vec![false; n];
                for &q in support {
                    mask[q] = true;
                }
                mask
            }
            Some((_, prev)) => {
                let mut mask = prev.clone();
                for (q, bit) in mask.iter_mut().enumerate() {
                    *bit = *bit && support.contains(&q);
                }
                mask
            }
        };
        let count_in_v = mask.iter().zip(in_v).filter(|&(&m, &v)| m && v).count();
        let count_in_complement =
            mask.iter().zip(in_v).filter(|&(&m, &v)| m && !v).count();
        let modulus = 1u64 << (p - m + 1);
        if (count_in_v as u64) % modulus != (count_in_complement as u64) % modulus {
            let mut generators: Vec<usize> =
                chosen.iter().map(|&(g, _)| g).collect();
            generators.push(*gen_index);
            return Some(RpViolation {
                generators,
                count_in_v,
                count_in_complement,
                modulus,
            });
        }
        chosen.push((*gen_index, mask));
        let deeper = subsets(x_gens, in_v, n, p, m + 1, idx + 1, chosen);
        chosen.pop();
        if deeper.is_some() {
            return deeper;
        }
    }
    None
}
