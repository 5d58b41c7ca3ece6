//! Rewrites an irredundant expression tree so that it evaluates to the
//! partial complement of the original graph.
//!
//! Labels split into three groups: for each original label `i`, vertices of
//! `S` carry `i` itself, vertices outside `S` carry `K + i`, and `2K + i`
//! serves as scratch space at union nodes, where `K` is the largest label
//! of the input tree. Joins are replicated for every endpoint combination
//! except both-in-`S`, and union nodes stitch in the flipped adjacencies
//! between the two sides' `S`-vertices.

use std::collections::{BTreeMap, BTreeSet};

use crate::graph::{Graph, GraphBuilder};

use super::{eval_state, CwError, CwExpression, Label};

type LabelMap = BTreeMap<Label, Vec<usize>>;

struct Ctx<'a> {
    s_names: &'a BTreeSet<String>,
    final_graph: &'a Graph,
    labels: &'a [Label],
    offset: Label,
    next_id: usize,
}

impl Ctx<'_> {
    fn alpha(&self, i: Label) -> Label {
        i
    }

    fn beta(&self, i: Label) -> Label {
        self.offset + i
    }

    fn gamma(&self, i: Label) -> Label {
        2 * self.offset + i
    }
}

/// Builds an expression tree for `G ⊕ S` from an irredundant tree for `G`;
/// `s` selects leaves by vertex name. The result has at most three times as
/// many distinct labels as the input.
pub fn transform_partial_complement(
    e: &CwExpression,
    s: &BTreeSet<String>,
) -> Result<CwExpression, CwError> {
    let st = eval_state(e)?;
    if let Some((a, b)) = st.first_redundant {
        return Err(CwError::RedundantJoin { a, b });
    }
    for name in s {
        if !st.names.iter().any(|n| n == name) {
            return Err(CwError::UnknownVertex(name.clone()));
        }
    }
    let mut b = GraphBuilder::new(st.names.len());
    for &(u, v) in &st.edges {
        b.add_edge(u, v);
    }
    let final_graph = b.build();

    let labels = e.label_set();
    let offset = labels.last().copied().unwrap_or(0);
    let mut ctx =
        Ctx { s_names: s, final_graph: &final_graph, labels: &labels, offset, next_id: 0 };
    let (expr, _) = transform_node(e, &mut ctx)?;
    Ok(expr)
}

fn transform_node(
    e: &CwExpression,
    ctx: &mut Ctx<'_>,
) -> Result<(CwExpression, LabelMap), CwError> {
    match e {
        CwExpression::Intro { label, name } => {
            let id = ctx.next_id;
            ctx.next_id += 1;
            let new_label = if ctx.s_names.contains(name) {
                ctx.alpha(*label)
            } else {
                ctx.beta(*label)
            };
            let mut map = LabelMap::new();
            map.insert(*label, vec![id]);
            Ok((CwExpression::intro(new_label, name.clone()), map))
        }

        CwExpression::Relabel { from, to, child } => {
            let (inner, mut map) = transform_node(child, ctx)?;
            // two relabel nodes, one per group
            let expr = CwExpression::relabel(
                ctx.alpha(*from),
                ctx.alpha(*to),
                CwExpression::relabel(ctx.beta(*from), ctx.beta(*to), inner),
            );
            if let Some(moved) = map.remove(from) {
                map.entry(*to).or_default().extend(moved);
            }
            Ok((expr, map))
        }

        CwExpression::Join { a, b, child } => {
            let (inner, map) = transform_node(child, ctx)?;
            // three join nodes covering every endpoint combination except
            // both-in-S, whose adjacency flips to non-adjacent
            let expr = CwExpression::join(
                ctx.alpha(*a),
                ctx.beta(*b),
                CwExpression::join(
                    ctx.alpha(*b),
                    ctx.beta(*a),
                    CwExpression::join(ctx.beta(*a), ctx.beta(*b), inner),
                ),
            );
            Ok((expr, map))
        }

        CwExpression::Union(left, right) => {
            let (left_expr, left_map) = transform_node(left, ctx)?;
            let (right_expr, right_map) = transform_node(right, ctx)?;

            // park the left side's S-vertices on the scratch labels
            let mut expr = left_expr;
            for &i in ctx.labels {
                expr = CwExpression::relabel(ctx.alpha(i), ctx.gamma(i), expr);
            }
            expr = CwExpression::union(expr, right_expr);

            // same-label classes across the union are never adjacent in the
            // final graph, so their S-vertices all need edges
            for &i in ctx.labels {
                expr = CwExpression::join(ctx.alpha(i), ctx.gamma(i), expr);
            }

            // distinct-label classes: flip exactly the pairs that the final
            // graph leaves non-adjacent
            for (&i, left_ids) in &left_map {
                for (&j, right_ids) in &right_map {
                    if i == j || left_ids.is_empty() || right_ids.is_empty() {
                        continue;
                    }
                    let adjacent = ctx.final_graph.has_edge(left_ids[0], right_ids[0]);
                    for &u in left_ids {
                        for &v in right_ids {
                            if ctx.final_graph.has_edge(u, v) != adjacent {
                                return Err(CwError::InhomogeneousUnion { a: i, b: j });
                            }
                        }
                    }
                    if !adjacent {
                        expr = CwExpression::join(ctx.gamma(i), ctx.alpha(j), expr);
                    }
                }
            }

            // restore the S-vertices to their primary labels
            for &i in ctx.labels {
                expr = CwExpression::relabel(ctx.gamma(i), ctx.alpha(i), expr);
            }

            let mut map = left_map;
            for (j, ids) in right_map {
                map.entry(j).or_default().extend(ids);
            }
            Ok((expr, map))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cwd::eval_expression;
    use crate::graph::VertexSet;

    fn p3_expression() -> CwExpression {
        CwExpression::join(
            1,
            2,
            CwExpression::union(
                CwExpression::intro(1, "b"),
                CwExpression::union(CwExpression::intro(2, "a"), CwExpression::intro(2, "c")),
            ),
        )
    }

    fn names(set: &[&str]) -> BTreeSet<String> {
        set.iter().map(|s| s.to_string()).collect()
    }

    /// Expected edge set by names: evaluate, map `s` to ids, complement.
    fn expected_edges(
        e: &CwExpression,
        s: &BTreeSet<String>,
    ) -> std::collections::BTreeSet<(String, String)> {
        let lg = eval_expression(e).unwrap();
        let ids = (0..lg.vertex_count()).filter(|&v| s.contains(lg.name_of(v)));
        let set = VertexSet::from_iter(lg.vertex_count(), ids).unwrap();
        let flipped = lg.graph().partial_complement(&set).unwrap();
        flipped
            .edges()
            .into_iter()
            .map(|(u, v)| {
                let (a, b) = (lg.name_of(u).to_string(), lg.name_of(v).to_string());
                if a <= b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect()
    }

    fn check_transform(e: &CwExpression, s: &BTreeSet<String>) {
        let t = transform_partial_complement(e, s).unwrap();
        let got = eval_expression(&t).unwrap();
        assert_eq!(got.named_edges(), expected_edges(e, s), "set {s:?} on {e:?}");
        assert!(t.width() <= 3 * e.width(), "width {} > 3*{}", t.width(), e.width());
    }

    #[test]
    fn empty_set_preserves_the_graph() {
        for e in [p3_expression(), CwExpression::intro(1, "a")] {
            check_transform(&e, &BTreeSet::new());
        }
    }

    #[test]
    fn p3_with_endpoints_becomes_triangle() {
        let e = p3_expression();
        let s = names(&["a", "c"]);
        let t = transform_partial_complement(&e, &s).unwrap();
        let got = eval_expression(&t).unwrap();
        let mut edges: Vec<(String, String)> = got.named_edges().into_iter().collect();
        edges.sort();
        assert_eq!(
            edges,
            vec![
                ("a".into(), "b".into()),
                ("a".into(), "c".into()),
                ("b".into(), "c".into())
            ]
        );
        assert!(t.width() <= 6);
    }

    #[test]
    fn k2_fully_complemented_loses_its_edge() {
        let e = CwExpression::join(
            1,
            2,
            CwExpression::union(CwExpression::intro(1, "a"), CwExpression::intro(2, "b")),
        );
        let t = transform_partial_complement(&e, &names(&["a", "b"])).unwrap();
        let got = eval_expression(&t).unwrap();
        assert_eq!(got.vertex_count(), 2);
        assert!(got.named_edges().is_empty());
    }

    #[test]
    fn every_subset_of_p3_checks_out() {
        let e = p3_expression();
        for mask in 0u8..8 {
            let mut s = BTreeSet::new();
            for (bit, name) in ["a", "b", "c"].iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    s.insert(name.to_string());
                }
            }
            check_transform(&e, &s);
        }
    }

    #[test]
    fn redundant_input_rejected() {
        let e = CwExpression::join(1, 2, p3_expression());
        assert_eq!(
            transform_partial_complement(&e, &BTreeSet::new()),
            Err(CwError::RedundantJoin { a: 1, b: 2 })
        );
    }

    #[test]
    fn unknown_vertex_rejected() {
        assert_eq!(
            transform_partial_complement(&p3_expression(), &names(&["z"])),
            Err(CwError::UnknownVertex("z".into()))
        );
    }

    #[test]
    fn random_expressions_smoke() {
        // the full 200-case sweep runs in the acceptance suite
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(0xC11D);
        for _ in 0..40 {
            let e = crate::generators::random_irredundant_expression(&mut rng, 3, 10);
            let leaves = e.leaf_names();
            let s: BTreeSet<String> =
                leaves.into_iter().filter(|_| rng.random_bool(0.4)).collect();
            check_transform(&e, &s);
        }
    }
}
