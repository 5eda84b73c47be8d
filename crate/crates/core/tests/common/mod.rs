#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use mcrd_core::text::{parse_graph, GraphFile};
use mcrd_core::{
    brute_force_mcrd, collect_mcrd, gen_random_convex, label_and_count, lex_convex_sort,
    ConvexBipartiteGraph, Label, LabelCountTables, LengthDistribution, RandomParams, VertexSet,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn fixture(name: &str) -> GraphFile {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    parse_graph(&text).unwrap()
}

pub fn convex_fixture(name: &str) -> ConvexBipartiteGraph {
    fixture(name).to_convex().unwrap()
}

pub fn family(sets: &[VertexSet]) -> BTreeSet<Vec<usize>> {
    sets.iter().map(|s| s.members().to_vec()).collect()
}

pub fn labels_as_strings(t: &LabelCountTables) -> Vec<String> {
    t.labels().iter().map(ToString::to_string).collect()
}

pub fn counts_as_u64(t: &LabelCountTables) -> Vec<u64> {
    t.counts()
        .iter()
        .map(|c| u64::try_from(c).unwrap())
        .collect()
}

/// The random convex instance used by the sweep for `seed`: sizes drawn
/// from `1..=16` and `1..=12`, interval lengths alternating between a
/// short uniform and a geometric distribution. Returned lex-convex sorted.
pub fn sweep_instance(seed: u64) -> ConvexBipartiteGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x6d63_7264);
    let n_x = rng.random_range(1..=16);
    let n_y = rng.random_range(1..=12);
    let mut p = RandomParams::new(n_x, n_y, seed);
    p.lengths = match seed % 3 {
        0 => LengthDistribution::Uniform { max: n_y },
        1 => LengthDistribution::Uniform { max: 3.min(n_y) },
        _ => LengthDistribution::Geometric { num: 1, den: 2 },
    };
    let (g, _) = lex_convex_sort(&gen_random_convex(p).unwrap());
    g
}

/// Whether `v` extends `u`: `left(u) < left(v) <= right(u)+1 <= right(v)`.
pub fn extends(g: &ConvexBipartiteGraph, u: usize, v: usize) -> bool {
    let (a, b) = (g.interval(u), g.interval(v));
    a.left < b.left && b.left <= a.right + 1 && a.right < b.right
}

/// Label 0 exactly on `N(y1)`, and a positive count exactly on finite labels.
pub fn check_zero_labels(g: &ConvexBipartiteGraph, t: &LabelCountTables) -> Result<(), String> {
    for x in 1..=g.n_x() {
        if (t.label(x) == Label::finite(0)) != (g.left(x) == 1) {
            return Err(format!("(a) fails at x{x}"));
        }
        if t.label(x).is_finite() == num_traits::Zero::is_zero(t.count(x)) {
            return Err(format!("count/label mismatch at x{x}"));
        }
    }
    Ok(())
}

/// Finite labels are nondecreasing in vertex index.
pub fn check_label_order(g: &ConvexBipartiteGraph, t: &LabelCountTables) -> Result<(), String> {
    let mut max_so_far: Option<(usize, Label)> = None;
    for v in 1..=g.n_x() {
        let lv = t.label(v);
        if !lv.is_finite() {
            continue;
        }
        if let Some((u, lu)) = max_so_far {
            if lu > lv {
                return Err(format!("(b) fails at x{u} ({lu}) x{v} ({lv})"));
            }
        }
        if max_so_far.is_none_or(|(_, lu)| lv > lu) {
            max_so_far = Some((v, lv));
        }
    }
    Ok(())
}

/// Equal left endpoints with finite labels share a label.
pub fn check_shared_left(g: &ConvexBipartiteGraph, t: &LabelCountTables) -> Result<(), String> {
    for u in 1..=g.n_x() {
        for v in u + 1..=g.n_x() {
            let (lu, lv) = (t.label(u), t.label(v));
            if g.left(u) == g.left(v) && lu.is_finite() && lv.is_finite() && lu != lv {
                return Err(format!("(d) fails at x{u} ({lu}) x{v} ({lv})"));
            }
        }
    }
    Ok(())
}

/// A positive label is one more than the smallest label among the vertices
/// it extends; no finite predecessor means unreachable.
pub fn check_min_predecessor(g: &ConvexBipartiteGraph, t: &LabelCountTables) -> Result<(), String> {
    for v in 1..=g.n_x() {
        if g.left(v) == 1 {
            continue;
        }
        let best = (1..v)
            .filter(|&u| extends(g, u, v))
            .filter_map(|u| t.label(u).value())
            .min();
        let expected = best.map_or(Label::UNREACHABLE, |b| Label::finite(b + 1));
        if t.label(v) != expected {
            return Err(format!("(e) fails at x{v}: {} vs {}", t.label(v), expected));
        }
    }
    Ok(())
}

/// Shortest tiling chain length, computed from its definition by dynamic
/// programming over vertices in index order. Unreachable is `None`.
pub fn chain_labels(g: &ConvexBipartiteGraph) -> Vec<Option<u32>> {
    let n = g.n_x();
    let mut labels = vec![None; n + 1];
    for v in 1..=n {
        labels[v] = if g.left(v) == 1 {
            Some(0)
        } else {
            (1..v)
                .filter(|&u| extends(g, u, v))
                .filter_map(|u| labels[u])
                .min()
                .map(|b: u32| b + 1)
        };
    }
    labels.remove(0);
    labels
}

/// Consecutive members of a minimum set extend each other and no member's
/// interval contains another's.
pub fn check_set_structure(g: &ConvexBipartiteGraph, set: &VertexSet) -> Result<(), String> {
    let m = set.members();
    for w in m.windows(2) {
        if !extends(g, w[0], w[1]) {
            return Err(format!("{set:?}: x{} does not extend x{}", w[1], w[0]));
        }
    }
    for &u in m {
        for &v in m {
            if u != v && g.interval(u).covers(&g.interval(v)) {
                return Err(format!("{set:?}: x{u} contains x{v}"));
            }
        }
    }
    Ok(())
}

/// Labels, enumerates and brute-forces `g`, comparing everything. Returns
/// `(k, number of sets, max Y-degree)` on success.
pub fn cross_check(g: &ConvexBipartiteGraph) -> Result<(usize, usize, usize), String> {
    let t = label_and_count(g).map_err(|e| e.to_string())?;
    let summary = mcrd_core::mcrd_summary(g, &t);
    let (sets, stats) = collect_mcrd(g, &t).map_err(|e| e.to_string())?;
    let general = g.to_general();
    let oracle = brute_force_mcrd(&general).map_err(|e| e.to_string())?;
    if summary.k != Some(oracle.k) {
        return Err(format!("k {:?} vs oracle {}", summary.k, oracle.k));
    }
    if summary.total != mcrd_core::BigUint::from(oracle.sets.len()) {
        return Err(format!(
            "total {} vs oracle {}",
            summary.total,
            oracle.sets.len()
        ));
    }
    if family(&sets) != family(&oracle.sets) || sets.len() != oracle.sets.len() {
        return Err(format!("families differ: {:?} vs {:?}", sets, oracle.sets));
    }
    if stats.outputs != oracle.sets.len() as u64 || stats.calls > oracle.k as u64 * stats.outputs {
        return Err(format!("stats {stats:?}"));
    }
    Ok((oracle.k, oracle.sets.len(), general.max_y_degree()))
}
