//! Depth-bounded module invariants: torsionfreeness, Gorenstein
//! projectivity, projective and Gorenstein dimension, stable fingerprints.

use crate::module::{is_projective, stable_endomorphism_dim, FPModule};
use crate::resolution::ext_regular_dim;

/// Modules whose realization grows beyond this are not pushed further along
/// syzygy chains; the affected answers become unknown.
pub const SIZE_LIMIT: usize = 128;

/// A three-valued answer for semidecidable properties.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tri {
    Yes,
    No,
    Unknown,
}

impl Tri {
    pub fn from_bool(b: bool) -> Tri {
        if b {
            Tri::Yes
        } else {
            Tri::No
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Tri::Yes => "yes",
            Tri::No => "no",
            Tri::Unknown => "unknown",
        }
    }
}

/// A depth-bounded dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Bounded {
    Value(usize),
    Unknown { depth: usize },
}

impl Bounded {
    pub fn value(self) -> Option<usize> {
        match self {
            Bounded::Value(v) => Some(v),
            Bounded::Unknown { .. } => None,
        }
    }

    /// Supremum; unknown if any input is unknown.
    pub fn sup(items: impl IntoIterator<Item = Bounded>, depth: usize) -> Bounded {
        let mut best = 0;
        for b in items {
            match b {
                Bounded::Value(v) => best = best.max(v),
                Bounded::Unknown { .. } => return Bounded::Unknown { depth },
            }
        }
        Bounded::Value(best)
    }
}

/// A nonvanishing Ext^j(M, R) (or Ext^j(Tr M, R) when `transpose`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtWitness {
    pub j: usize,
    pub dim: usize,
    pub transpose: bool,
}

/// Ext^j_{R^op}(Tr M, R) = 0 for 1 ≤ j ≤ n.
pub fn is_n_torsionfree_module(m: &FPModule, n: usize) -> bool {
    let tr = m.transpose();
    (1..=n).all(|j| ext_regular_dim(tr, j) == 0)
}

fn effective_depth(m: &FPModule, depth: usize) -> usize {
    match m.ring().flags().gldim {
        Some(g) => depth.max(g + 1),
        None => depth,
    }
}

/// First nonvanishing Ext^j(M, R) or Ext^j(Tr M, R) with j ≤ depth.
pub fn gp_obstruction(m: &FPModule, depth: usize) -> Option<ExtWitness> {
    let tr = m.transpose();
    for j in 1..=depth {
        let dim = ext_regular_dim(m, j);
        if dim != 0 {
            return Some(ExtWitness { j, dim, transpose: false });
        }
        let dim = ext_regular_dim(tr, j);
        if dim != 0 {
            return Some(ExtWitness { j, dim, transpose: true });
        }
    }
    None
}

/// Gorenstein projectivity with its obstruction when the answer is no.
pub fn gorenstein_projective_module(m: &FPModule, depth: usize) -> (Tri, Option<ExtWitness>) {
    let flags = m.ring().flags();
    if flags.self_injective || is_projective(m) {
        return (Tri::Yes, None);
    }
    if let Some(w) = gp_obstruction(m, effective_depth(m, depth)) {
        return (Tri::No, Some(w));
    }
    if flags.gldim.is_some() {
        // Over finite global dimension a Gorenstein projective module is projective.
        return (Tri::No, None);
    }
    (Tri::Unknown, None)
}

pub fn is_gorenstein_projective_module(m: &FPModule, depth: usize) -> Tri {
    gorenstein_projective_module(m, depth).0
}

/// Least k ≤ depth with Ω^k M projective.
pub fn pd_module(m: &FPModule, depth: usize) -> Bounded {
    let depth_eff = effective_depth(m, depth);
    let mut cur = m.clone();
    for k in 0..=depth_eff {
        if is_projective(&cur) {
            return Bounded::Value(k);
        }
        if k == depth_eff || cur.dim() > SIZE_LIMIT {
            break;
        }
        cur = cur.syzygy();
    }
    Bounded::Unknown { depth }
}

/// Least k ≤ depth with Ω^k M Gorenstein projective, provided every earlier
/// syzygy is certified not Gorenstein projective.
pub fn gdim_module(m: &FPModule, depth: usize) -> Bounded {
    let mut cur = m.clone();
    for k in 0..=depth {
        match is_gorenstein_projective_module(&cur, depth) {
            Tri::Yes => return Bounded::Value(k),
            Tri::No => {}
            Tri::Unknown => return Bounded::Unknown { depth },
        }
        if k == depth || cur.dim() > SIZE_LIMIT {
            break;
        }
        cur = cur.syzygy();
    }
    Bounded::Unknown { depth }
}

/// Ext^j(M, R) for 1 ≤ j ≤ depth, then Ext^j(Tr M, R) for 1 ≤ j ≤ depth,
/// then the dimension of the stable endomorphism space.
pub fn stable_fingerprint(m: &FPModule, depth: usize) -> Vec<usize> {
    let tr = m.transpose();
    let mut out: Vec<usize> = (1..=depth).map(|j| ext_regular_dim(m, j)).collect();
    out.extend((1..=depth).map(|j| ext_regular_dim(tr, j)));
    out.push(stable_endomorphism_dim(m));
    out
}
