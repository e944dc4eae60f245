use serde::Serialize;

use super::{g6, ExceptionRecord, Outcome, Suite, VerifyConfig};
use crate::error::Result;
use crate::extremal::{extremal_set, lemma1_audit};
use crate::graph::{make_named, Graph, NamedGraph, VertexSet};
use crate::partition::{
    catlin_lai_partition, chi_free, exact_free_partition, lovasz_partition, theorem1_partition,
    CatlinLaiOutcome, PatternSpecList, Theorem1Outcome,
};
use crate::patterns::{clique_number, degeneracy, is_free, is_isomorphic, Pattern};

pub(crate) struct Context {
    k_max: usize,
    patterns: Vec<Pattern>,
    /// Chromatic number of each single-graph pattern, aligned with `patterns`.
    pattern_chi: Vec<Option<usize>>,
    edge: Pattern,
}

impl Context {
    pub(crate) fn new(config: &VerifyConfig) -> Result<Self> {
        let edge = Pattern::complete(2)?;
        let pattern_chi = config
            .catalog
            .patterns
            .iter()
            .map(|p| {
                p.single_graph()
                    .map(|g| chi_free(&g, &edge).map(|(c, _)| c))
                    .transpose()
            })
            .collect::<Result<_>>()?;
        Ok(Context {
            k_max: config.k_max,
            patterns: config.catalog.patterns.clone(),
            pattern_chi,
            edge,
        })
    }

    fn spec_lists(&self, total: usize) -> Result<Vec<PatternSpecList>> {
        super::Catalog::new(self.patterns.clone()).spec_lists(total, self.k_max)
    }
}

fn name<T: Serialize>(t: &T) -> String {
    serde_json::to_value(t)
        .ok()
        .and_then(|v| v.as_str().map(str::to_owned))
        .unwrap_or_default()
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

pub(crate) fn check(suite: Suite, ctx: &Context, h: &Graph) -> Outcome {
    let mut out = Outcome::default();
    match suite {
        Suite::Theorem1 => theorem1(ctx, h, &mut out),
        Suite::Lemma1 => lemma1(ctx, h, &mut out),
        Suite::Bounds => bounds(ctx, h, &mut out),
        Suite::Lovasz => lovasz(ctx, h, &mut out),
        Suite::CatlinBrooks => catlin_brooks(h, &mut out),
        Suite::Degenerate => degenerate(h, &mut out),
    }
    out
}

/// Instances named in the source statements, checked once per run.
pub(crate) fn fixed(suite: Suite) -> Outcome {
    let mut out = Outcome::default();
    match suite {
        Suite::Bounds => {
            // χ_{K3}(K7) = 4 exceeds ⌈Δ/δ⌉ = 3: the complete-graph carve-out is needed
            let k7 = make_named(&NamedGraph::Complete(7)).expect("K7");
            let k3 = Pattern::complete(3).expect("K3");
            out.instances += 1;
            match chi_free(&k7, &k3) {
                Ok((4, _)) if ceil_div(6, 2) == 3 => out.tally("fixed_k7_k3_chi_4"),
                Ok((c, _)) => out.fail(
                    &k7,
                    "K3",
                    "sharp_exception",
                    format!("chi = {c}"),
                    replay_chi(&k7, "K3"),
                ),
                Err(e) => out.fail(
                    &k7,
                    "K3",
                    "sharp_exception",
                    e.to_string(),
                    replay_chi(&k7, "K3"),
                ),
            }
        }
        Suite::Lovasz => {
            let k333 =
                make_named(&NamedGraph::CompleteMultipartite(vec![3, 3, 3])).expect("K3,3,3");
            let star = Pattern::star(3).expect("K1,3");
            out.instances += 2;
            let spec = "K1,3,K1,3";
            match exact_free_partition(&k333, &[star.clone(), star], 2) {
                Ok(None) => out.tally("fixed_k333_no_2_partition"),
                Ok(Some(classes)) => out.fail(
                    &k333,
                    spec,
                    "k333_negative",
                    format!("{classes:?}"),
                    format!("gfree partition --input K3,3,3 --specs '{spec}'"),
                ),
                Err(e) => out.fail(&k333, spec, "k333_negative", e.to_string(), String::new()),
            }
            lovasz_instance(&k333, &[3, 4], &mut out);
            if out.failures.is_empty() {
                out.tally("fixed_k333_lovasz_3_4");
            }
        }
        _ => {}
    }
    out
}

fn replay_partition(h: &Graph, specs: &str) -> String {
    format!("gfree partition --input g6:{} --specs '{specs}'", g6(h))
}

fn replay_chi(h: &Graph, p: &str) -> String {
    format!("gfree chi --input g6:{} -p '{p}'", g6(h))
}

fn theorem1(ctx: &Context, h: &Graph, out: &mut Outcome) {
    let specs_all = match ctx.spec_lists(h.max_degree()) {
        Ok(s) => s,
        Err(e) => return out.fail(h, "", "spec_lists", e.to_string(), String::new()),
    };
    for specs in specs_all {
        out.instances += 1;
        let spec = specs.to_string();
        match theorem1_partition(h, &specs) {
            Ok(Theorem1Outcome::Certificate(c)) if c.is_valid() => {
                out.tally(c.method_tag.to_string())
            }
            Ok(Theorem1Outcome::Certificate(c)) => out.fail(
                h,
                &spec,
                "certificate_audit",
                serde_json::to_string(&c.audit).unwrap_or_default(),
                replay_partition(h, &spec),
            ),
            Ok(Theorem1Outcome::Exception(case)) => {
                out.tally(format!("exception_{case}"));
                out.exceptions.push(ExceptionRecord {
                    graph_g6: g6(h),
                    spec,
                    case,
                });
            }
            Err(e) => out.fail(
                h,
                &spec,
                "theorem1_partition",
                e.to_string(),
                replay_partition(h, &spec),
            ),
        }
    }
}

fn lemma1(ctx: &Context, h: &Graph, out: &mut Outcome) {
    let delta = h.max_degree();
    for p in ctx.patterns.iter().filter(|p| p.single_graph().is_some()) {
        if p.min_degree() > delta {
            continue;
        }
        out.instances += 1;
        let replay = format!("gfree audit --input g6:{} -p '{p}'", g6(h));
        match extremal_set(h, p).and_then(|e| lemma1_audit(h, p, &e)) {
            Ok(a) if a.passed => match a.part_c_case {
                Some(c) => out.tally(format!("part_c_{}", name(&c))),
                None => out.tally("no_regular_component"),
            },
            Ok(a) => out.fail(
                h,
                p.to_string(),
                "lemma1_audit",
                serde_json::to_string(&a).unwrap_or_default(),
                replay,
            ),
            Err(e) => out.fail(h, p.to_string(), "extremal_set", e.to_string(), replay),
        }
    }
}

fn bounds(ctx: &Context, h: &Graph, out: &mut Outcome) {
    let n = h.order();
    let delta = h.max_degree();
    let chi_h = match chi_free(h, &ctx.edge) {
        Ok((c, _)) => c,
        Err(e) => {
            return out.fail(
                h,
                "K2",
                "chromatic_number",
                e.to_string(),
                replay_chi(h, "K2"),
            )
        }
    };
    for (p, chi_g) in ctx.patterns.iter().zip(&ctx.pattern_chi) {
        out.instances += 1;
        let spec = p.to_string();
        let d = p.min_degree();
        let chi = match chi_free(h, p) {
            Ok((c, _)) => c,
            Err(e) => {
                out.fail(h, &spec, "chi_free", e.to_string(), replay_chi(h, &spec));
                continue;
            }
        };

        // ⌈(Δ+1)/δ⌉ through the local search: classes of max degree < δ avoid every graph of
        // minimum degree δ
        let k = ceil_div(delta + 1, d);
        match lovasz_partition(h, &vec![d; k]) {
            Ok(l) if l.classes.iter().all(|&c| is_free(h, c, p)) && chi <= k => {}
            Ok(l) => out.fail(
                h,
                &spec,
                "lovasz_bound",
                format!("chi = {chi}, k = {k}, classes {:?}", l.classes),
                replay_chi(h, &spec),
            ),
            Err(e) => out.fail(
                h,
                &spec,
                "lovasz_bound",
                e.to_string(),
                replay_chi(h, &spec),
            ),
        }

        let Some(g) = p.single_graph() else { continue };

        let cor = ceil_div(delta, d);
        let carved = n == 1
            || (g.is_regular() && is_isomorphic(h, &g))
            || (g.is_complete() && h.is_complete() && delta.is_multiple_of(d))
            || (g.order() == 2 && (h.is_odd_cycle() || h.is_complete()));
        if carved {
            out.tally("corollary_carved_out");
            if chi > cor {
                out.tally("corollary_carved_out_exceeded");
            }
        } else if chi > cor {
            out.fail(
                h,
                &spec,
                "corollary_bound",
                format!("chi = {chi} > {cor}"),
                replay_chi(h, &spec),
            );
        }

        if let Some(chi_g) = *chi_g {
            let bound = ceil_div(chi_h, chi_g - 1);
            if chi > bound {
                out.fail(
                    h,
                    &spec,
                    "chromatic_bound",
                    format!("chi = {chi} > {bound}"),
                    replay_chi(h, &spec),
                );
            }
        }
        if chi == cor && !carved {
            out.tally("corollary_tight");
        }
    }
}

fn lovasz_instance(h: &Graph, degrees: &[usize], out: &mut Outcome) {
    let spec = degrees
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",");
    let replay = format!("gfree lovasz --input g6:{} --degrees {spec}", g6(h));
    match lovasz_partition(h, degrees) {
        Ok(l) => {
            let mut union = VertexSet::EMPTY;
            let mut ok = true;
            for (&c, &d) in l.classes.iter().zip(degrees) {
                ok &= union.is_disjoint(c) && h.max_degree_in(c) < d;
                union |= c;
            }
            ok &= union == h.vertices();
            let limit = h.edge_count() * degrees.iter().max().copied().unwrap_or(0);
            if !ok {
                out.fail(
                    h,
                    spec,
                    "lovasz_classes",
                    format!("{:?}", l.classes),
                    replay,
                );
            } else if l.moves > limit {
                out.fail(
                    h,
                    spec,
                    "lovasz_moves",
                    format!("{} > {limit}", l.moves),
                    replay,
                );
            } else {
                out.add("moves_total", l.moves);
            }
        }
        Err(e) => out.fail(h, spec, "lovasz_partition", e.to_string(), replay),
    }
}

fn lovasz(ctx: &Context, h: &Graph, out: &mut Outcome) {
    for degrees in super::compositions(h.max_degree() + 1, ctx.k_max) {
        out.instances += 1;
        lovasz_instance(h, &degrees, out);
    }
}

/// Independence number by trying every subset.
fn brute_alpha(h: &Graph) -> usize {
    (0u64..1 << h.order())
        .map(VertexSet::from_bits)
        .filter(|&s| h.edge_count_in(s) == 0)
        .map(VertexSet::len)
        .max()
        .unwrap_or(0)
}

/// Largest `k`-degenerate vertex set by trying every subset.
fn brute_max_degenerate(h: &Graph, k: usize) -> usize {
    (0u64..1 << h.order())
        .map(VertexSet::from_bits)
        .filter(|&s| s.is_empty() || degeneracy(h, s).is_ok_and(|(dg, _)| dg <= k))
        .map(VertexSet::len)
        .max()
        .unwrap_or(0)
}

fn catlin_brooks(h: &Graph, out: &mut Outcome) {
    let delta = h.max_degree();
    if delta == 0 {
        return;
    }
    out.instances += 1;
    let spec = vec!["K2"; delta].join(",");
    let specs: PatternSpecList = spec.parse().expect("K2 list");
    match theorem1_partition(h, &specs) {
        Ok(Theorem1Outcome::Exception(case)) => {
            if h.is_odd_cycle() || h.is_complete() {
                out.tally(format!("exception_{case}"));
                out.exceptions.push(ExceptionRecord {
                    graph_g6: g6(h),
                    spec: spec.clone(),
                    case,
                });
            } else {
                out.fail(
                    h,
                    &spec,
                    "brooks_exception",
                    case.to_string(),
                    replay_partition(h, &spec),
                );
            }
        }
        Ok(Theorem1Outcome::Certificate(c)) => {
            let alpha = brute_alpha(h);
            if !c.is_valid()
                || c.classes.len() != delta
                || !c.classes.iter().all(|&s| h.is_independent(s))
            {
                out.fail(
                    h,
                    &spec,
                    "proper_colouring",
                    format!("{:?}", c.classes),
                    replay_partition(h, &spec),
                );
            } else if c.classes[0].len() != alpha {
                out.fail(
                    h,
                    &spec,
                    "max_independent_class",
                    format!("|V_1| = {}, alpha = {alpha}", c.classes[0].len()),
                    replay_partition(h, &spec),
                );
            } else {
                out.tally("catlin_colouring");
            }
        }
        Err(e) => out.fail(
            h,
            &spec,
            "theorem1_partition",
            e.to_string(),
            replay_partition(h, &spec),
        ),
    }

    let replay = format!("gfree partition --input g6:{} --arboricity", g6(h));
    match catlin_lai_partition(h) {
        Ok(CatlinLaiOutcome::Exception(case)) => {
            out.tally(format!("arboricity_exception_{case}"));
            if h.is_complete() && h.order().is_multiple_of(2) {
                // even complete graphs meet the arboricity hypothesis but not the partition theorem's
                out.tally("arboricity_even_complete_excluded");
            }
        }
        Ok(CatlinLaiOutcome::Partition(p)) => {
            let classes = &p.certificate.classes;
            if !p.certificate.is_valid()
                || classes.len() != delta.div_ceil(2)
                || !classes.iter().all(|&c| h.is_acyclic_in(c))
            {
                out.fail(
                    h,
                    "arboricity",
                    "acyclic_classes",
                    format!("{classes:?}"),
                    replay,
                );
                return;
            }
            out.tally("arboricity_partition");
            match (p.option_a, p.option_b) {
                (Some(a), Some(b)) => {
                    out.tally(format!("arboricity_option_a_{a}"));
                    out.tally(format!("arboricity_option_b_{b}"));
                    if !a && !b {
                        out.fail(
                            h,
                            "arboricity",
                            "option_a_or_b",
                            "neither option achievable",
                            replay,
                        );
                    }
                }
                _ => out.tally("arboricity_even_delta"),
            }
        }
        Err(e) => out.fail(
            h,
            "arboricity",
            "catlin_lai_partition",
            e.to_string(),
            replay,
        ),
    }
}

fn degenerate(h: &Graph, out: &mut Outcome) {
    let delta = h.max_degree();
    if delta < 3 {
        return;
    }
    match clique_number(h) {
        Ok(w) if w <= delta => {}
        Ok(_) => return out.tally("skipped_clique_too_large"),
        Err(e) => return out.fail(h, "", "clique_number", e.to_string(), String::new()),
    }
    for d1 in 1..delta {
        let d2 = delta - d1;
        out.instances += 1;

        // maximum (d1-1)-degenerate class plus a (d2-1)-degenerate class
        let spec = format!("mindeg>={d1},mindeg>={d2}");
        let specs: PatternSpecList = spec.parse().expect("min-degree specs");
        let degenerate_at_most =
            |s: VertexSet, k: usize| s.is_empty() || degeneracy(h, s).is_ok_and(|(dg, _)| dg <= k);
        match theorem1_partition(h, &specs) {
            Ok(Theorem1Outcome::Certificate(c)) => {
                let (v1, v2) = (c.classes[0], c.classes[1]);
                let best = brute_max_degenerate(h, d1 - 1);
                if !c.is_valid()
                    || !degenerate_at_most(v1, d1 - 1)
                    || !degenerate_at_most(v2, d2 - 1)
                {
                    out.fail(
                        h,
                        &spec,
                        "degenerate_classes",
                        format!("{:?}", c.classes),
                        replay_partition(h, &spec),
                    );
                } else if v1.len() != best {
                    out.fail(
                        h,
                        &spec,
                        "maximum_degenerate",
                        format!("|V_1| = {}, best = {best}", v1.len()),
                        replay_partition(h, &spec),
                    );
                } else {
                    out.tally("matamala");
                }
            }
            Ok(Theorem1Outcome::Exception(case)) => out.fail(
                h,
                &spec,
                "matamala_exception",
                case.to_string(),
                replay_partition(h, &spec),
            ),
            Err(e) => out.fail(
                h,
                &spec,
                "theorem1_partition",
                e.to_string(),
                replay_partition(h, &spec),
            ),
        }

        // both Δ(H[V_i]) ≤ d_i and (d_i-1)-degenerate
        let class = |d: usize| -> Result<Pattern> {
            Pattern::family(vec![Pattern::star(d + 1)?, Pattern::min_degree_family(d)?])
        };
        let bm_spec = format!("K1,{}|mindeg>={d1},K1,{}|mindeg>={d2}", d1 + 1, d2 + 1);
        let replay = replay_partition(h, &bm_spec);
        let found = class(d1)
            .and_then(|a| Ok((a, class(d2)?)))
            .and_then(|(a, b)| exact_free_partition(h, &[a, b], 2));
        match found {
            Ok(Some(c)) => {
                let ok = [(c[0], d1), (c[1], d2)]
                    .iter()
                    .all(|&(s, d)| h.max_degree_in(s) <= d && degenerate_at_most(s, d - 1));
                if ok {
                    out.tally("bollobas_manvel");
                } else {
                    out.fail(
                        h,
                        &bm_spec,
                        "bollobas_manvel_classes",
                        format!("{c:?}"),
                        replay,
                    );
                }
            }
            Ok(None) => out.fail(h, &bm_spec, "bollobas_manvel", "no partition", replay),
            Err(e) => out.fail(h, &bm_spec, "bollobas_manvel", e.to_string(), replay),
        }
    }
}
