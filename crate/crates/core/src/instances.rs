//! Seeded instance generators with planted or known optimal solutions.

use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

use crate::ea::rng_from_seed;
use crate::graph::{Tournament, UndirectedGraph};
use crate::io::{read_instance, write_instance, ParseError};
use crate::oracle::min_vertex_cover_bipartite;
use crate::problems::{InstanceGraph, ProblemInstance, ProblemKind};
use crate::vertex_set::{VertexId, VertexSet};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum InstanceError {
    #[error("parameter k = {k} must satisfy {min} <= k <= {max}")]
    KOutOfRange { k: usize, min: usize, max: usize },
    #[error("edge probability {0} must lie in (0, 1]")]
    Probability(f64),
    #[error("epsilon {0} must lie in (0, 1/2)")]
    Epsilon(f64),
    #[error("{what} must be at least {min}, got {got}")]
    TooSmall {
        what: &'static str,
        min: usize,
        got: usize,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratedInstance {
    pub instance: ProblemInstance,
    pub known_optimum: Option<usize>,
    pub planted_solution: Option<VertexSet>,
    pub generator_tag: String,
    pub seed: u64,
}

impl GeneratedInstance {
    /// Header comment `generator=<tag> seed=<s> planted=<ids>`.
    pub fn header(&self) -> String {
        let planted = match &self.planted_solution {
            Some(s) if !s.is_empty() => s
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(","),
            Some(_) => "empty".to_string(),
            None => "none".to_string(),
        };
        let mut h = format!(
            "generator={} seed={} planted={}",
            self.generator_tag, self.seed, planted
        );
        if let Some(k) = self.known_optimum {
            h.push_str(&format!(" optimum={k}"));
        }
        h
    }

    pub fn to_file_string(&self) -> String {
        write_instance(&self.instance, &[self.header()])
    }

    /// Parses a file written by [`Self::to_file_string`]. Files without a
    /// generator header load with tag `file` and no planted solution.
    pub fn from_file_str(text: &str) -> Result<Self, ParseError> {
        let file = read_instance(text)?;
        let n = file.instance.n();
        let mut out = GeneratedInstance {
            instance: file.instance,
            known_optimum: None,
            planted_solution: None,
            generator_tag: "file".to_string(),
            seed: 0,
        };
        let Some(header) = file.comments.iter().find(|c| c.starts_with("generator=")) else {
            return Ok(out);
        };
        let bad = |message: &str| ParseError::Syntax {
            line: 2,
            message: message.to_string(),
        };
        for field in header.split_whitespace() {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| bad("malformed generator header"))?;
            match key {
                "generator" => out.generator_tag = value.to_string(),
                "seed" => out.seed = value.parse().map_err(|_| bad("invalid seed"))?,
                "optimum" => {
                    out.known_optimum = Some(value.parse().map_err(|_| bad("invalid optimum"))?)
                }
                "planted" => {
                    out.planted_solution = match value {
                        "none" => None,
                        "empty" => Some(VertexSet::empty(n)),
                        ids => {
                            let mut s = VertexSet::empty(n);
                            for id in ids.split(',') {
                                let v: VertexId =
                                    id.parse().map_err(|_| bad("invalid planted vertex"))?;
                                if v >= n {
                                    return Err(bad("planted vertex out of range"));
                                }
                                s.insert(v);
                            }
                            Some(s)
                        }
                    }
                }
                _ => {}
            }
        }
        Ok(out)
    }
}

fn check_k(k: usize, min: usize, max: usize) -> Result<(), InstanceError> {
    if k < min || k > max {
        Err(InstanceError::KOutOfRange { k, min, max })
    } else {
        Ok(())
    }
}

fn vc_instance(g: UndirectedGraph, k: usize) -> ProblemInstance {
    ProblemInstance::vertex_cover(g, k).expect("generators keep k within range")
}

/// Random `k`-set `C`; each unordered pair with at least one endpoint in `C`
/// becomes an edge with probability `p`. `C` is a cover of size `k`.
pub fn gen_random_planted(
    n: usize,
    k: usize,
    p: f64,
    seed: u64,
) -> Result<GeneratedInstance, InstanceError> {
    check_k(k, 1, n)?;
    if !(p > 0.0 && p <= 1.0) {
        return Err(InstanceError::Probability(p));
    }
    let mut rng = rng_from_seed(seed);
    let mut order: Vec<VertexId> = (0..n).collect();
    order.shuffle(&mut rng);
    let cover = VertexSet::from_vertices(n, order[..k].iter().copied());
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if (cover.contains(u) || cover.contains(v)) && rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let g = UndirectedGraph::new(n, edges).expect("pairs are distinct");
    Ok(GeneratedInstance {
        instance: vc_instance(g, k),
        known_optimum: None,
        planted_solution: Some(cover),
        generator_tag: "random-planted".to_string(),
        seed,
    })
}

/// Clique on `0..k` joined to every vertex of the anticlique `k..n`.
pub fn gen_clique_anticlique(n: usize, k: usize) -> Result<GeneratedInstance, InstanceError> {
    check_k(k, 1, n)?;
    let mut edges = Vec::new();
    for u in 0..k {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    let g = UndirectedGraph::new(n, edges).expect("pairs are distinct");
    assert_eq!(g.m(), k * (k - 1) / 2 + k * (n - k));
    // The largest independent set is the anticlique or a single clique vertex.
    Ok(GeneratedInstance {
        instance: vc_instance(g, k),
        known_optimum: Some(k.min(n - 1)),
        planted_solution: Some(VertexSet::from_vertices(n, 0..k)),
        generator_tag: "clique-anticlique".to_string(),
        seed: 0,
    })
}

/// Complete bipartite `K_{k, n-k}` with the small side `0..k`.
pub fn gen_biclique(n: usize, k: usize) -> Result<GeneratedInstance, InstanceError> {
    check_k(k, 1, n / 2)?;
    let edges = (0..k).flat_map(|u| (k..n).map(move |v| (u, v)));
    let g = UndirectedGraph::new(n, edges).expect("pairs are distinct");
    assert_eq!(g.m(), k * (n - k));
    Ok(GeneratedInstance {
        instance: vc_instance(g, k),
        known_optimum: Some(k),
        planted_solution: Some(VertexSet::from_vertices(n, 0..k)),
        generator_tag: "biclique".to_string(),
        seed: 0,
    })
}

/// `K_{l, l+2}` plus one pendant per large-side vertex.
///
/// Layout: small side `0..l`, large side `l..2l+2`, and the pendant of large
/// vertex `l+i` is `2l+2+i`.
pub fn gen_papadimitriou_steiglitz(l: usize) -> Result<GeneratedInstance, InstanceError> {
    if l < 1 {
        return Err(InstanceError::TooSmall {
            what: "order l",
            min: 1,
            got: l,
        });
    }
    let n = 3 * l + 4;
    let large = l..2 * l + 2;
    let mut edges: Vec<(usize, usize)> = (0..l)
        .flat_map(|u| large.clone().map(move |v| (u, v)))
        .collect();
    edges.extend(large.clone().map(|v| (v, v + l + 2)));
    let g = UndirectedGraph::new(n, edges).expect("pairs are distinct");
    assert_eq!(g.m(), (l + 1) * (l + 2));
    Ok(GeneratedInstance {
        instance: vc_instance(g, l + 2),
        known_optimum: Some(l + 2),
        planted_solution: Some(VertexSet::from_vertices(n, large)),
        generator_tag: format!("ps-l{l}"),
        seed: 0,
    })
}

fn round_half_up(x: f64) -> usize {
    (x + 0.5).floor() as usize
}

/// Chain of `sqrt_n` complete bipartite blocks `K_{a,b}` with
/// `a = round((1-eps)(sqrt_n-1))` and `b = round(1+eps(sqrt_n-1))`.
///
/// Each block lists its `a` side first, then its `b` side. The lowest-index
/// `b`-side vertex of consecutive blocks are joined. The optimum is computed
/// exactly from a maximum matching, since the whole chain is bipartite.
pub fn gen_oliveto_he_yao(sqrt_n: usize, eps: f64) -> Result<GeneratedInstance, InstanceError> {
    if sqrt_n < 2 {
        return Err(InstanceError::TooSmall {
            what: "block count",
            min: 2,
            got: sqrt_n,
        });
    }
    if !(eps > 0.0 && eps < 0.5) {
        return Err(InstanceError::Epsilon(eps));
    }
    let span = (sqrt_n - 1) as f64;
    let a = round_half_up((1.0 - eps) * span);
    let b = round_half_up(1.0 + eps * span);
    let block = a + b;
    let n = sqrt_n * block;
    let mut edges = Vec::new();
    for i in 0..sqrt_n {
        let base = i * block;
        for u in base..base + a {
            for v in base + a..base + block {
                edges.push((u, v));
            }
        }
        if i + 1 < sqrt_n {
            edges.push((base + a, base + block + a));
        }
    }
    let g = UndirectedGraph::new(n, edges).expect("pairs are distinct");
    let (k_star, witness) = min_vertex_cover_bipartite(&g).expect("block chain is bipartite");
    Ok(GeneratedInstance {
        instance: vc_instance(g, k_star),
        known_optimum: Some(k_star),
        planted_solution: Some(witness),
        generator_tag: format!("ohy-s{sqrt_n}-eps{eps}"),
        seed: 0,
    })
}

/// Random transitive tournament whose arcs touching a random `k`-set are
/// re-oriented uniformly at random. The `k`-set is a feedback vertex set.
pub fn gen_random_tournament(
    n: usize,
    k: usize,
    seed: u64,
) -> Result<GeneratedInstance, InstanceError> {
    check_k(k, 0, n)?;
    let mut rng = rng_from_seed(seed);
    let mut order: Vec<VertexId> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut rank = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    let mut picks: Vec<VertexId> = (0..n).collect();
    picks.shuffle(&mut rng);
    let planted = VertexSet::from_vertices(n, picks[..k].iter().copied());
    let mut arcs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            let forward = if planted.contains(u) || planted.contains(v) {
                rng.random_bool(0.5)
            } else {
                rank[u] < rank[v]
            };
            arcs.push(if forward { (u, v) } else { (v, u) });
        }
    }
    let t = Tournament::new(n, arcs).expect("every pair is oriented once");
    Ok(GeneratedInstance {
        instance: ProblemInstance::fvst(t, k).expect("k <= n"),
        known_optimum: (k == 0).then_some(0),
        planted_solution: Some(planted),
        generator_tag: "fvst-planted".to_string(),
        seed,
    })
}

/// Random bipartite graph (edge probability 1/2 across the sides) plus a
/// random `k`-set whose vertices are wired to random others, each closing an
/// odd cycle where possible. The `k`-set is an odd cycle transversal.
pub fn gen_random_oct_instance(
    n: usize,
    k: usize,
    seed: u64,
) -> Result<GeneratedInstance, InstanceError> {
    check_k(k, 0, n)?;
    let mut rng = rng_from_seed(seed);
    let mut picks: Vec<VertexId> = (0..n).collect();
    picks.shuffle(&mut rng);
    let planted = VertexSet::from_vertices(n, picks[..k].iter().copied());
    let side: Vec<bool> = (0..n).map(|_| rng.random_bool(0.5)).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let inside = planted.contains(u) || planted.contains(v);
            if inside {
                if rng.random_bool(0.5) {
                    edges.push((u, v));
                }
            } else if side[u] != side[v] && rng.random_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    // Give each planted vertex a triangle on some bipartite edge.
    let base: Vec<(usize, usize)> = edges
        .iter()
        .copied()
        .filter(|&(u, v)| !planted.contains(u) && !planted.contains(v))
        .collect();
    if !base.is_empty() {
        for w in &planted {
            let (u, v) = base[rng.random_range(0..base.len())];
            for x in [u, v] {
                let e = (w.min(x), w.max(x));
                if !edges.contains(&e) {
                    edges.push(e);
                }
            }
        }
    }
    let g = UndirectedGraph::new(n, edges).expect("pairs are distinct");
    Ok(GeneratedInstance {
        instance: ProblemInstance::oct(g, k).expect("k <= n"),
        known_optimum: (k == 0).then_some(0),
        planted_solution: Some(planted),
        generator_tag: "oct-planted".to_string(),
        seed,
    })
}

/// Generator for the planted classes of each problem kind.
pub fn gen_planted(
    kind: ProblemKind,
    n: usize,
    k: usize,
    p: f64,
    seed: u64,
) -> Result<GeneratedInstance, InstanceError> {
    match kind {
        ProblemKind::VertexCover => gen_random_planted(n, k, p, seed),
        ProblemKind::Fvst => gen_random_tournament(n, k, seed),
        ProblemKind::Oct => gen_random_oct_instance(n, k, seed),
    }
}

impl GeneratedInstance {
    pub fn graph(&self) -> &InstanceGraph {
        self.instance.graph()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{min_fvst_exact, min_oct_exact, min_vertex_cover_exact};

    fn edges(g: &GeneratedInstance) -> Vec<(usize, usize)> {
        g.instance.undirected().unwrap().edges().to_vec()
    }

    fn planted_ok(g: &GeneratedInstance) -> bool {
        let s = g.planted_solution.as_ref().unwrap();
        g.instance.with_k(s.len()).unwrap().verify_final(s)
    }

    #[test]
    fn clique_anticlique_formula() {
        let g = gen_clique_anticlique(5, 2).unwrap();
        assert_eq!(g.instance.graph().m(), 7);
        assert!(planted_ok(&g));
        let star = gen_clique_anticlique(6, 1).unwrap();
        assert_eq!(star.instance.graph().m(), 5);
        assert_eq!(
            min_vertex_cover_exact(star.instance.undirected().unwrap())
                .unwrap()
                .0,
            1
        );
        for (n, k) in [(8, 3), (10, 4), (12, 6)] {
            let g = gen_clique_anticlique(n, k).unwrap();
            let opt = min_vertex_cover_exact(g.instance.undirected().unwrap())
                .unwrap()
                .0;
            assert_eq!(Some(opt), g.known_optimum);
        }
        let big = gen_clique_anticlique(100, 8).unwrap();
        let g = big.instance.undirected().unwrap();
        assert!(crate::oracle::vertex_cover_at_most(g, 7).is_none());
        assert!(crate::oracle::vertex_cover_at_most(g, 8).is_some());
        assert!(gen_clique_anticlique(3, 4).is_err());
        assert!(gen_clique_anticlique(3, 0).is_err());
    }

    #[test]
    fn biclique_formula() {
        let g = gen_biclique(10, 3).unwrap();
        assert_eq!(g.instance.graph().m(), 21);
        assert_eq!(
            min_vertex_cover_exact(g.instance.undirected().unwrap())
                .unwrap()
                .0,
            3
        );
        assert_eq!(gen_biclique(100, 8).unwrap().instance.graph().m(), 736);
        assert!(gen_biclique(10, 6).is_err());
    }

    #[test]
    fn papadimitriou_steiglitz_formula() {
        for (l, n, m) in [(1, 7, 6), (5, 19, 42), (20, 64, 462)] {
            let g = gen_papadimitriou_steiglitz(l).unwrap();
            assert_eq!((g.instance.n(), g.instance.graph().m()), (n, m));
            assert!(planted_ok(&g));
        }
        for l in [1, 4] {
            let g = gen_papadimitriou_steiglitz(l).unwrap();
            assert_eq!(
                min_vertex_cover_exact(g.instance.undirected().unwrap())
                    .unwrap()
                    .0,
                l + 2
            );
        }
        assert!(gen_papadimitriou_steiglitz(0).is_err());
    }

    #[test]
    fn oliveto_he_yao_captions() {
        for (s, eps, n, m, k) in [
            (5, 0.1, 25, 24, 5),
            (6, 1.0 / 3.0, 36, 59, 18),
            (10, 0.25, 100, 219, 30),
        ] {
            let g = gen_oliveto_he_yao(s, eps).unwrap();
            assert_eq!(g.instance.n(), n);
            assert_eq!(g.instance.graph().m(), m);
            assert_eq!(g.known_optimum, Some(k));
            assert!(planted_ok(&g));
        }
        let g = gen_oliveto_he_yao(4, 0.3).unwrap();
        assert_eq!(
            g.known_optimum.unwrap(),
            min_vertex_cover_exact(g.instance.undirected().unwrap())
                .unwrap()
                .0
        );
        assert!(gen_oliveto_he_yao(1, 0.1).is_err());
        assert!(gen_oliveto_he_yao(5, 0.5).is_err());
    }

    #[test]
    fn random_planted_properties() {
        let a = gen_random_planted(20, 4, 0.3, 11).unwrap();
        let b = gen_random_planted(20, 4, 0.3, 11).unwrap();
        assert_eq!(a, b);
        assert!(planted_ok(&a));
        assert_ne!(
            edges(&a),
            edges(&gen_random_planted(20, 4, 0.3, 12).unwrap())
        );
        let full = gen_random_planted(7, 7, 1.0, 3).unwrap();
        assert_eq!(full.instance.graph().m(), 21);
        assert!(gen_random_planted(5, 6, 0.5, 0).is_err());
        assert!(gen_random_planted(5, 2, 0.0, 0).is_err());
        assert!(gen_random_planted(5, 2, 1.5, 0).is_err());
    }

    #[test]
    fn random_planted_limit_is_clique_anticlique() {
        for seed in 0..20 {
            let (n, k) = (12, 1 + seed as usize % 5);
            let g = gen_random_planted(n, k, 1.0, seed).unwrap();
            let cover = g.planted_solution.clone().unwrap();
            // Relabel cover vertices to 0..k and the rest to k..n, keeping order.
            let mut label = vec![0; n];
            for (i, v) in cover.iter().chain(cover.complement().iter()).enumerate() {
                label[v] = i;
            }
            let mut relabeled: Vec<_> = edges(&g)
                .into_iter()
                .map(|(u, v)| (label[u].min(label[v]), label[u].max(label[v])))
                .collect();
            relabeled.sort_unstable();
            assert_eq!(relabeled, edges(&gen_clique_anticlique(n, k).unwrap()));
        }
    }

    #[test]
    fn planted_tournaments_and_oct() {
        for seed in 0..40 {
            let n = 5 + seed as usize % 8;
            let k = seed as usize % 4;
            let t = gen_random_tournament(n, k, seed).unwrap();
            assert!(planted_ok(&t));
            assert!(min_fvst_exact(t.instance.tournament().unwrap()).unwrap().0 <= k);
            let o = gen_random_oct_instance(n, k, seed).unwrap();
            assert!(planted_ok(&o));
            assert!(min_oct_exact(o.instance.undirected().unwrap()).unwrap().0 <= k);
            assert_eq!(t, gen_random_tournament(n, k, seed).unwrap());
            assert_eq!(o, gen_random_oct_instance(n, k, seed).unwrap());
        }
        let t0 = gen_random_tournament(8, 0, 1).unwrap();
        assert!(t0
            .instance
            .tournament()
            .unwrap()
            .is_transitive(&VertexSet::full(8)));
        let o0 = gen_random_oct_instance(8, 0, 1).unwrap();
        assert!(o0
            .instance
            .undirected()
            .unwrap()
            .bipartition(&VertexSet::full(8))
            .is_some());
    }

    #[test]
    fn file_round_trip_keeps_metadata() {
        for g in [
            gen_random_planted(15, 3, 0.5, 9).unwrap(),
            gen_oliveto_he_yao(5, 0.1).unwrap(),
            gen_random_tournament(6, 2, 4).unwrap(),
            gen_random_oct_instance(9, 0, 2).unwrap(),
        ] {
            let text = g.to_file_string();
            assert!(text.lines().nth(1).unwrap().starts_with("c generator="));
            assert_eq!(GeneratedInstance::from_file_str(&text).unwrap(), g);
        }
    }
}
