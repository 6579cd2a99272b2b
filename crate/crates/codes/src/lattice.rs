//! Triangular patches of the hexagonal (6.6.6) color-code lattice.
//!
//! Sites live on axial coordinates (r, c) with r, c ≥ 0 and r + c ≤ L
//! where L = 3(d-1)/2. A site hosts a plaquette center when
//! (c - r) ≡ 1 (mod 3) and a qubit otherwise. The six lattice neighbors of
//! (r, c) are (r, c±1), (r±1, c), (r+1, c-1), (r-1, c+1).
//!
//! Qubits are numbered by a deterministic center-out spiral: ring by ring
//! in hex distance from the central qubit, each ring sorted by angle and
//! rotated to start at the first direction not behind the previous ring's
//! start. Plaquettes are ordered by angle of their center around the
//! central qubit. For d = 3 this reproduces the published 7-qubit
//! labeling with faces {1,2,3,5}, {1,3,4,6}, {1,2,4,7}.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Axial site coordinate.
pub type Site = (i32, i32);

/// One of the three face colors of the lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FaceColor {
    R,
    G,
    B,
}

/// The two qubit classes of the bipartite lattice. Adjacent qubits always
/// lie in different classes, so every even face splits evenly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum QubitClass {
    /// (c - r) ≡ 0 (mod 3); contains the central qubit.
    A,
    /// (c - r) ≡ 2 (mod 3).
    B,
}

/// A hexagonal or truncated (weight-4) plaquette.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Plaquette {
    pub center: Site,
    pub color: FaceColor,
    /// Supporting qubit indices, ascending.
    pub support: Vec<usize>,
    /// The same qubits in counterclockwise geometric order around the
    /// face center, starting from the least angle.
    pub cycle: Vec<usize>,
}

#[derive(Debug, Error)]
pub enum LatticeError {
    #[error("distance must be an odd integer ≥ 3, got {0}")]
    BadDistance(usize),
}

/// A distance-d triangular color-code patch with its canonical qubit
/// numbering (index 0 is the central qubit).
#[derive(Debug, Clone)]
pub struct ColorLattice {
    d: usize,
    l: i32,
    qubit_sites: Vec<Site>,
    plaquettes: Vec<Plaquette>,
}

const NEIGHBOR_OFFSETS: [(i32, i32); 6] =
    [(0, 1), (0, -1), (1, 0), (-1, 0), (1, -1), (-1, 1)];

fn in_patch(l: i32, (r, c): Site) -> bool {
    r >= 0 && c >= 0 && r + c <= l
}

fn is_qubit_site((r, c): Site) -> bool {
    (c - r).rem_euclid(3) != 1
}

/// Euclidean position of a site (unit edge length between columns).
fn position((r, c): Site) -> (f64, f64) {
    (c as f64 + r as f64 / 2.0, r as f64 * 3f64.sqrt() / 2.0)
}

fn hex_distance(a: Site, b: Site) -> i32 {
    let (dr, dc) = (a.0 - b.0, a.1 - b.1);
    (dr.abs() + dc.abs() + (dr + dc).abs()) / 2
}

fn angle_around(origin: (f64, f64), p: (f64, f64)) -> f64 {
    (p.1 - origin.1).atan2(p.0 - origin.0)
}

impl ColorLattice {
    pub fn build(d: usize) -> Result<Self, LatticeError> {
        if d < 3 || d % 2 == 0 {
            return Err(LatticeError::BadDistance(d));
        }
        let l = (3 * (d as i32 - 1)) / 2;
        let center: Site = ((d as i32 - 1) / 2, (d as i32 - 1) / 2);
        let mut qubit_sites_raw = Vec::new();
        let mut plaq_centers = Vec::new();
        for r in 0..=l {
            for c in 0..=(l - r) {
                if is_qubit_site((r, c)) {
                    qubit_sites_raw.push((r, c));
                } else {
                    plaq_centers.push((r, c));
                }
            }
        }

        let qubit_sites = spiral_order(center, &qubit_sites_raw);
        let site_index = |s: Site| qubit_sites.iter().position(|&q| q == s).unwrap();

        // plaquettes ordered by angle of their center around the central
        // qubit, ties broken by distance
        let origin = position(center);
        plaq_centers.sort_by(|&a, &b| {
            let key = |s: Site| {
                let p = position(s);
                let ang = angle_around(origin, p).rem_euclid(std::f64::consts::TAU);
                let r2 = (p.0 - origin.0).powi(2) + (p.1 - origin.1).powi(2);
                (ang, r2)
            };
            let (ka, kb) = (key(a), key(b));
            ka.0.total_cmp(&kb.0).then(ka.1.total_cmp(&kb.1))
        });

        let plaquettes = plaq_centers
            .into_iter()
            .map(|pc| {
                let mut support: Vec<usize> = NEIGHBOR_OFFSETS
                    .iter()
                    .map(|&(dr, dc)| (pc.0 + dr, pc.1 + dc))
                    .filter(|&s| in_patch(l, s))
                    .map(site_index)
                    .collect();
                support.sort_unstable();
                let fc = position(pc);
                let mut cycle = support.clone();
                cycle.sort_by(|&a, &b| {
                    angle_around(fc, position(qubit_sites[a]))
                        .total_cmp(&angle_around(fc, position(qubit_sites[b])))
                });
                Plaquette {
                    center: pc,
                    color: face_color(pc),
                    support,
                    cycle,
                }
            })
            .collect();

        Ok(ColorLattice {
            d,
            l,
            qubit_sites,
            plaquettes,
        })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Number of qubits, (3d² + 1)/4.
    pub fn n_qubits(&self) -> usize {
        self.qubit_sites.len()
    }

    /// Number of plaquettes, (n - 1)/2.
    pub fn n_plaquettes(&self) -> usize {
        self.plaquettes.len()
    }

    pub fn plaquettes(&self) -> &[Plaquette] {
        &self.plaquettes
    }

    pub fn qubit_site(&self, index: usize) -> Site {
        self.qubit_sites[index]
    }

    pub fn qubit_class(&self, index: usize) -> QubitClass {
        let (r, c) = self.qubit_sites[index];
        if (c - r).rem_euclid(3) == 0 {
            QubitClass::A
        } else {
            QubitClass::B
        }
    }

    /// All lattice edges between adjacent qubits, each as (low, high)
    /// index pair, sorted.
    pub fn qubit_edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for (i, &s) in self.qubit_sites.iter().enumerate() {
            for &(dr, dc) in &NEIGHBOR_OFFSETS {
                let t = (s.0 + dr, s.1 + dc);
                if in_patch(self.l, t) && is_qubit_site(t) {
                    let j = self.qubit_sites.iter().position(|&q| q == t).unwrap();
                    if i < j {
                        edges.push((i, j));
                    }
                }
            }
        }
        edges.sort_unstable();
        edges
    }
}

/// Numbers qubits center-out: ring by hex distance, angle-sorted, with
/// each ring rotated to start at the first angle not less than the
/// previous ring's starting angle.
fn spiral_order(center: Site, sites: &[Site]) -> Vec<Site> {
    let max_dist = sites.iter().map(|&s| hex_distance(s, center)).max().unwrap();
    let origin = position(center);
    let mut out = Vec::with_capacity(sites.len());
    let mut prev_start = -std::f64::consts::PI;
    for ring in 0..=max_dist {
        let mut members: Vec<Site> = sites
            .iter()
            .copied()
            .filter(|&s| hex_distance(s, center) == ring)
            .collect();
        if members.is_empty() {
            continue;
        }
        if ring == 0 {
            out.extend(members);
            continue;
        }
        members.sort_by(|&a, &b| {
            angle_around(origin, position(a)).total_cmp(&angle_around(origin, position(b)))
        });
        let start = members
            .iter()
            .position(|&s| angle_around(origin, position(s)) >= prev_start - 1e-9)
            .unwrap_or(0);
        members.rotate_left(start);
        prev_start = angle_around(origin, position(members[0]));
        out.extend(members);
    }
    out
}

fn face_color(pc: Site) -> FaceColor {
    // decompose the center into superlattice coordinates:
    // (r, c) = alpha*(1,1) + beta*(-1,2) + (0,1)
    let (r, c) = pc;
    let beta = (c - r - 1) / 3;
    let alpha = r + beta;
    match (alpha - beta).rem_euclid(3) {
        0 => FaceColor::R,
        1 => FaceColor::G,
        _ => FaceColor::B,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_closed_forms() {
        for d in [3usize, 5, 7, 9] {
            let lat = ColorLattice::build(d).unwrap();
            assert_eq!(lat.n_qubits(), (3 * d * d + 1) / 4, "d={d}");
            assert_eq!(lat.n_plaquettes(), (lat.n_qubits() - 1) / 2, "d={d}");
        }
    }

    #[test]
    fn rejects_bad_distance() {
        assert!(ColorLattice::build(2).is_err());
        assert!(ColorLattice::build(4).is_err());
        assert!(ColorLattice::build(1).is_err());
    }

    #[test]
    fn faces_are_even_and_small() {
        for d in [3usize, 5, 7] {
            let lat = ColorLattice::build(d).unwrap();
            for p in lat.plaquettes() {
                assert!(p.support.len() == 4 || p.support.len() == 6);
            }
        }
    }

    #[test]
    fn same_color_faces_are_disjoint() {
        let lat = ColorLattice::build(7).unwrap();
        for (i, p) in lat.plaquettes().iter().enumerate() {
            for q in &lat.plaquettes()[i + 1..] {
                if p.color == q.color {
                    assert!(p.support.iter().all(|s| !q.support.contains(s)));
                }
            }
        }
    }

    #[test]
    fn faces_alternate_qubit_classes() {
        for d in [3usize, 5, 7] {
            let lat = ColorLattice::build(d).unwrap();
            for p in lat.plaquettes() {
                let a = p
                    .support
                    .iter()
                    .filter(|&&q| lat.qubit_class(q) == QubitClass::A)
                    .count();
                assert_eq!(2 * a, p.support.len(), "d={d} face {:?}", p.center);
            }
        }
    }

    #[test]
    fn d3_spiral_reproduces_published_faces() {
        let lat = ColorLattice::build(3).unwrap();
        // 1-based labels: faces {1,2,3,5}, {1,3,4,6}, {1,2,4,7}
        let faces: Vec<Vec<usize>> = lat
            .plaquettes()
            .iter()
            .map(|p| p.support.iter().map(|&q| q + 1).collect())
            .collect();
        assert_eq!(faces, vec![vec![1, 2, 3, 5], vec![1, 3, 4, 6], vec![1, 2, 4, 7]]);
    }
}
