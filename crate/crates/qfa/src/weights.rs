//! Weight-lattice combinatorics for sl_n: the affine Weyl group dot action
//! at level ell, the closed fundamental alcove, linkage orbits, and the
//! rank-1 sequence n_1 < n_2 < ... used throughout the module theory.
//!
//! Weights are integer vectors in the fundamental-weight basis, so the k-th
//! coordinate of lambda is the pairing with the k-th simple coroot.  Roots
//! live in the same coordinate system through the Cartan matrix.

use serde::Serialize;
use std::collections::{BTreeSet, VecDeque};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct Weight {
    pub coords: Vec<i64>,
}

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight { coords }
    }

    pub fn rank1(n: i64) -> Self {
        Weight { coords: vec![n] }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    /// rho = (1, ..., 1): half-sum of positive roots.
    pub fn rho(rank: usize) -> Self {
        Weight {
            coords: vec![1; rank],
        }
    }

    fn add(&self, other: &Weight) -> Weight {
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    fn sub(&self, other: &Weight) -> Weight {
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    fn scaled(&self, c: i64) -> Weight {
        Weight {
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }

    /// `self <= other` in the dominance order: the difference is a
    /// non-negative integer combination of positive roots.
    pub fn dominance_le(&self, other: &Weight) -> bool {
        // For type A, mu <= lambda iff lambda - mu has non-negative partial
        // "root coordinates"; solve C x = lambda - mu for the root
        // coordinates x (C the Cartan matrix) and check x_i >= 0 integral.
        let rank = self.rank();
        let diff = other.sub(self);
        // The root coordinates of the difference are C^{-1} d, with C the
        // type-A Cartan matrix; its inverse is rational with denominator
        // rank+1: (C^{-1})_{ij} = min(i,j) - ij/(rank+1) (1-based indices).
        let n1 = rank as i64 + 1;
        for i in 1..=rank as i64 {
            let mut num = 0i64; // (rank+1) * x_i
            for j in 1..=rank as i64 {
                let cinv_num = i.min(j) * n1 - i * j; // (rank+1) * (C^{-1})_{ij}
                num += cinv_num * diff.coords[(j - 1) as usize];
            }
            if num < 0 || num % n1 != 0 {
                return false;
            }
        }
        true
    }
}

/// The positive roots of sl_{rank+1}, each as the interval [i, j] of simple
/// roots it sums, together with its coordinate vector in the
/// fundamental-weight basis.
#[derive(Clone, Debug)]
pub struct PositiveRoot {
    /// inclusive interval of simple-root indices, 0-based
    pub lo: usize,
    pub hi: usize,
    /// coordinates in the fundamental-weight basis (sum of Cartan rows)
    pub coords: Weight,
}

pub fn positive_roots(rank: usize) -> Vec<PositiveRoot> {
    let mut out = Vec::new();
    for lo in 0..rank {
        for hi in lo..rank {
            let mut coords = vec![0i64; rank];
            for k in lo..=hi {
                // add the k-th row of the Cartan matrix
                coords[k] += 2;
                if k > 0 {
                    coords[k - 1] -= 1;
                }
                if k + 1 < rank {
                    coords[k + 1] -= 1;
                }
            }
            out.push(PositiveRoot {
                lo,
                hi,
                coords: Weight::new(coords),
            });
        }
    }
    out
}

/// Pairing of a weight with the coroot of the positive root [lo, hi]:
/// in type A this is the sum of the fundamental coordinates over the
/// interval.
pub fn coroot_pairing(w: &Weight, root: &PositiveRoot) -> i64 {
    w.coords[root.lo..=root.hi].iter().sum()
}

/// An affine reflection s_{beta, m} acting at level ell through the dot
/// action `s_{beta,m} . lambda = s_beta(lambda + rho) - rho + m ell beta`.
#[derive(Clone, Debug)]
pub struct AffineReflection {
    pub beta: PositiveRoot,
    pub m: i64,
    pub ell: u32,
}

pub fn dot_reflect(r: &AffineReflection, w: &Weight) -> Weight {
    let rho = Weight::rho(w.rank());
    let shifted = w.add(&rho);
    let pairing = coroot_pairing(&shifted, &r.beta);
    shifted
        .sub(&r.beta.coords.scaled(pairing))
        .sub(&rho)
        .add(&r.beta.coords.scaled(r.m * r.ell as i64))
}

/// Membership in the closed fundamental alcove:
/// `0 <= <lambda + rho, beta-check> <= ell` for every positive root.
pub fn in_fundamental_domain(w: &Weight, ell: u32) -> bool {
    let rho = Weight::rho(w.rank());
    let shifted = w.add(&rho);
    positive_roots(w.rank()).iter().all(|beta| {
        let p = coroot_pairing(&shifted, beta);
        0 <= p && p <= ell as i64
    })
}

/// `lambda` is in the Steinberg family `(ell-1) rho + ell X+`.
pub fn is_steinberg_family(w: &Weight, ell: u32) -> bool {
    let l = ell as i64;
    w.coords.iter().all(|&c| c >= l - 1 && (c - (l - 1)) % l == 0)
}

#[derive(Clone, Debug, Serialize)]
pub struct LinkageOrbit {
    pub representative: Weight,
    pub members: Vec<Weight>,
}

/// Height functional used to linearize the dominance order: the pairing
/// with rho-check, i.e. the sum over positive roots of coroot pairings.
fn height(w: &Weight) -> i64 {
    positive_roots(w.rank())
        .iter()
        .map(|beta| coroot_pairing(w, beta))
        .sum()
}

/// All dominant members of the dot orbit of `w` with
/// `<nu + rho, beta-check> <= bound` for every positive root, sorted by
/// height with lexicographic tie-break (a linear extension of dominance).
///
/// Enumeration is a breadth-first closure under every affine reflection
/// whose image stays inside a slack ball, never a closed form.
pub fn orbit_dominant(w: &Weight, ell: u32, bound: i64) -> LinkageOrbit {
    assert!(
        in_fundamental_domain(w, ell),
        "orbit representative must lie in the fundamental domain"
    );
    let rank = w.rank();
    let roots = positive_roots(rank);
    let rho = Weight::rho(rank);
    let slack = bound + 2 * ell as i64;
    let in_ball = |v: &Weight| -> bool {
        let shifted = v.add(&rho);
        roots
            .iter()
            .all(|beta| coroot_pairing(&shifted, beta).abs() <= slack)
    };
    let mut seen: BTreeSet<Weight> = BTreeSet::new();
    let mut queue: VecDeque<Weight> = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    let m_max = slack / ell as i64 + 2;
    while let Some(cur) = queue.pop_front() {
        for beta in &roots {
            for m in -m_max..=m_max {
                let refl = AffineReflection {
                    beta: beta.clone(),
                    m,
                    ell,
                };
                let img = dot_reflect(&refl, &cur);
                if in_ball(&img) && !seen.contains(&img) {
                    seen.insert(img.clone());
                    queue.push_back(img);
                }
            }
        }
    }
    let mut members: Vec<Weight> = seen
        .into_iter()
        .filter(|v| {
            let shifted = v.add(&rho);
            v.is_dominant() && roots.iter().all(|beta| coroot_pairing(&shifted, beta) <= bound)
        })
        .collect();
    members.sort_by(|a, b| height(a).cmp(&height(b)).then(a.coords.cmp(&b.coords)));
    LinkageOrbit {
        representative: w.clone(),
        members,
    }
}

/// For rank 1: writes n = n0 + ell*n1 and returns
/// n' = (ell - 2 - n0) + ell*(n1 - 1) in the mixed case, `None` when the
/// Weyl module of highest weight n is irreducible (n1 = 0 or n0 = ell-1).
pub fn sl2_prime(n: u64, ell: u32) -> Option<u64> {
    let l = ell as u64;
    let n0 = n % l;
    let n1 = n / l;
    if n1 == 0 || n0 == l - 1 {
        None
    } else {
        Some((l - 2 - n0) + l * (n1 - 1))
    }
}

/// The unique increasing sequence n = n_1 < n_2 < ... with
/// n_i = (n_{i+1})', truncated to `count` entries.  Requires
/// 0 <= n <= ell-2; successors are found by upward scan, not a closed form.
pub fn sl2_sequence(n: u64, ell: u32, count: usize) -> Result<Vec<u64>, String> {
    let l = ell as u64;
    if n % l == l - 1 {
        return Err(format!(
            "{} is congruent to -1 mod {}; it lies in the Steinberg family and starts no sequence",
            n, ell
        ));
    }
    if n > l - 2 {
        return Err(format!(
            "sequence start must lie in the fundamental alcove: 0 <= n <= {}",
            l - 2
        ));
    }
    let mut out = vec![n];
    while out.len() < count {
        let cur = *out.last().unwrap();
        let next = (cur + 1..=cur + 2 * l)
            .find(|&cand| sl2_prime(cand, ell) == Some(cur))
            .ok_or_else(|| format!("no successor of {} found within 2*ell; sequence logic broken", cur))?;
        out.push(next);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r1(n: i64) -> Weight {
        Weight::rank1(n)
    }

    #[test]
    fn dot_reflect_rank1() {
        // (-1, m) . n = -n - 2 + 2 m ell: the negative root reflection
        let roots = positive_roots(1);
        let refl = AffineReflection {
            beta: roots[0].clone(),
            m: 1,
            ell: 3,
        };
        assert_eq!(dot_reflect(&refl, &r1(0)), r1(4));
        // s_{beta,0} fixes -rho and is an involution
        let refl0 = AffineReflection {
            beta: roots[0].clone(),
            m: 0,
            ell: 3,
        };
        assert_eq!(dot_reflect(&refl0, &r1(-1)), r1(-1));
        for n in -5..=5 {
            assert_eq!(dot_reflect(&refl0, &dot_reflect(&refl0, &r1(n))), r1(n));
        }
    }

    #[test]
    fn dot_reflect_rank2() {
        // s_{alpha_1, 0} . (3,1) = (-5, 5) at ell = 5
        let roots = positive_roots(2);
        let alpha1 = roots
            .iter()
            .find(|r| r.lo == 0 && r.hi == 0)
            .unwrap()
            .clone();
        let refl = AffineReflection {
            beta: alpha1,
            m: 0,
            ell: 5,
        };
        assert_eq!(
            dot_reflect(&refl, &Weight::new(vec![3, 1])),
            Weight::new(vec![-5, 5])
        );
    }

    #[test]
    fn fundamental_domain_rank1_and_rank2() {
        // rank 1, ell = 3: the closed alcove is {-1, 0, 1, 2}
        for n in -4..=6i64 {
            assert_eq!(
                in_fundamental_domain(&r1(n), 3),
                (-1..=2).contains(&n),
                "n = {}",
                n
            );
        }
        // (4,0) at ell = 5: the simple-root pairings are 5 and 1, but the
        // highest-root pairing is 6 > 5, so it lies outside the closed alcove.
        assert!(!in_fundamental_domain(&Weight::new(vec![4, 0]), 5));
        assert!(in_fundamental_domain(&Weight::new(vec![3, 0]), 5));
        assert!(!in_fundamental_domain(&Weight::new(vec![4, 1]), 5));
    }

    #[test]
    fn steinberg_family() {
        assert!(is_steinberg_family(&r1(2), 3));
        assert!(!is_steinberg_family(&r1(4), 3));
        assert!(is_steinberg_family(&r1(5), 3));
        assert!(is_steinberg_family(&Weight::new(vec![4, 4]), 5));
        assert!(is_steinberg_family(&Weight::new(vec![4, 9]), 5));
        assert!(!is_steinberg_family(&Weight::new(vec![4, 5]), 5));
    }

    #[test]
    fn orbit_rank1_matches_expected() {
        let orbit = orbit_dominant(&r1(0), 3, 14);
        let got: Vec<i64> = orbit.members.iter().map(|w| w.coords[0]).collect();
        assert_eq!(got, vec![0, 4, 6, 10, 12]);
        // -1 = -rho is fixed by every reflection; its orbit consists of the
        // translates -1 + 2 m ell, so the dominant members at ell = 3 are
        // 5, 11, ...  (the Steinberg weight ell-1 lies in a different orbit:
        // distinct orbits partition the Steinberg family).
        let orbit = orbit_dominant(&r1(-1), 3, 12);
        let got: Vec<i64> = orbit.members.iter().map(|w| w.coords[0]).collect();
        assert_eq!(got, vec![5, 11]);
        let orbit = orbit_dominant(&r1(2), 3, 15);
        let got: Vec<i64> = orbit.members.iter().map(|w| w.coords[0]).collect();
        assert_eq!(got, vec![2, 8, 14]);
    }

    #[test]
    fn sl2_prime_cases() {
        assert_eq!(sl2_prime(3, 3), Some(1));
        assert_eq!(sl2_prime(2, 3), None);
        assert_eq!(sl2_prime(7, 5), Some(1));
        assert_eq!(sl2_prime(4, 3), Some(0));
        // strictly decreasing whenever defined
        for ell in [3u32, 5, 7] {
            for n in 0..60u64 {
                if let Some(p) = sl2_prime(n, ell) {
                    assert!(p < n);
                }
            }
        }
    }

    #[test]
    fn sl2_sequences() {
        assert_eq!(sl2_sequence(0, 3, 5).unwrap(), vec![0, 4, 6, 10, 12]);
        assert_eq!(sl2_sequence(1, 3, 4).unwrap(), vec![1, 3, 7, 9]);
        assert_eq!(sl2_sequence(3, 5, 3).unwrap(), vec![3, 5, 13]);
        assert!(sl2_sequence(2, 3, 3).is_err());
        assert!(sl2_sequence(4, 5, 3).is_err());
        for ell in [3u32, 5, 7] {
            for n in 0..=(ell as u64 - 2) {
                assert_eq!(sl2_sequence(n, ell, 4).unwrap()[0], n);
            }
        }
    }

    #[test]
    fn orbit_equals_sequence_rank1() {
        for ell in [3u32, 5, 7] {
            for n in 0..=(ell as i64 - 2) {
                let seq = sl2_sequence(n as u64, ell, 4).unwrap();
                let bound = *seq.last().unwrap() as i64 + 2;
                let orbit = orbit_dominant(&r1(n), ell, bound);
                let got: Vec<u64> = orbit.members.iter().map(|w| w.coords[0] as u64).collect();
                assert_eq!(got, seq, "ell = {}, n = {}", ell, n);
            }
        }
    }

    #[test]
    fn orbits_partition_dominant_weights() {
        // rank 1: every dominant weight n <= 50 lies in exactly one orbit
        for ell in [3u32, 5, 7] {
            let bound = 52;
            let mut counts = vec![0usize; 51];
            for rep in -1..=(ell as i64 - 1) {
                let orbit = orbit_dominant(&r1(rep), ell, bound);
                for w in &orbit.members {
                    let n = w.coords[0];
                    if (0..=50).contains(&n) {
                        counts[n as usize] += 1;
                    }
                }
            }
            for (n, c) in counts.iter().enumerate() {
                assert_eq!(*c, 1, "ell = {}, n = {}", ell, n);
            }
        }
        // rank 2, ell = 5: representatives in the closed alcove cover all
        // dominant weights with coordinates <= 12 exactly once
        let ell = 5u32;
        let bound = 28; // <lambda + rho, theta-check> for coords (12,12) is 26
        let mut reps = Vec::new();
        for a in -1..=5i64 {
            for b in -1..=5i64 {
                let w = Weight::new(vec![a, b]);
                if in_fundamental_domain(&w, ell) {
                    reps.push(w);
                }
            }
        }
        let mut count = std::collections::HashMap::new();
        for rep in &reps {
            let orbit = orbit_dominant(rep, ell, bound);
            for w in orbit.members {
                *count.entry(w).or_insert(0usize) += 1;
            }
        }
        for a in 0..=12i64 {
            for b in 0..=12i64 {
                let w = Weight::new(vec![a, b]);
                assert_eq!(count.get(&w), Some(&1), "weight ({}, {})", a, b);
            }
        }
    }

    #[test]
    fn dominance_order() {
        // rank 1: n <= m iff m - n is a non-negative even integer
        assert!(r1(0).dominance_le(&r1(4)));
        assert!(!r1(0).dominance_le(&r1(3)));
        assert!(!r1(4).dominance_le(&r1(0)));
        // rank 2: (0,0) <= (1,1) (difference is the highest root)
        assert!(Weight::new(vec![0, 0]).dominance_le(&Weight::new(vec![1, 1])));
        assert!(!Weight::new(vec![0, 0]).dominance_le(&Weight::new(vec![1, 0])));
    }
}
