//! Seeded random instance generation backing the differential test suites:
//! plain and regular random graphs, irredundant expression trees, and
//! random sentences.

use std::collections::HashSet;

use rand::seq::IndexedRandom;
use rand::Rng;

use crate::cwd::{CwExpression, Label};
use crate::graph::{Graph, GraphBuilder, VertexSet};
use crate::mso1::Mso1Formula;

/// Erdős–Rényi graph: each pair is an edge with probability `p`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                b.add_edge(u, v);
            }
        }
    }
    b.build()
}

/// Uniformly random subset of `0..n`.
pub fn random_subset<R: Rng>(rng: &mut R, n: usize) -> VertexSet {
    VertexSet::from_iter(n, (0..n).filter(|_| rng.random_bool(0.5))).unwrap()
}

/// Random `r`-regular graph, or `None` when no such graph exists (`n * r`
/// odd or `r >= n`). Starts from a circulant graph and shuffles it with
/// degree-preserving double-edge swaps, so generation never fails.
pub fn random_regular_graph<R: Rng>(rng: &mut R, n: usize, r: usize) -> Option<Graph> {
    if r >= n.max(1) || !(n * r).is_multiple_of(2) {
        return None;
    }
    if r == 0 {
        return Some(Graph::empty(n));
    }
    let mut b = GraphBuilder::new(n);
    let mut edges = Vec::with_capacity(n * r / 2);
    for k in 1..=r / 2 {
        for i in 0..n {
            let j = (i + k) % n;
            b.add_edge(i, j);
            edges.push((i, j));
        }
    }
    if r % 2 == 1 {
        // n is even here; close the degree with the antipodal matching
        for i in 0..n / 2 {
            b.add_edge(i, i + n / 2);
            edges.push((i, i + n / 2));
        }
    }
    for _ in 0..10 * edges.len() {
        let i = rng.random_range(0..edges.len());
        let j = rng.random_range(0..edges.len());
        let (a, b1) = edges[i];
        let (mut c, mut d) = edges[j];
        if rng.random_bool(0.5) {
            std::mem::swap(&mut c, &mut d);
        }
        let distinct = a != c && a != d && b1 != c && b1 != d;
        if !distinct || b.has_edge(a, c) || b.has_edge(b1, d) {
            continue;
        }
        b.remove_edge(a, b1);
        b.remove_edge(c, d);
        b.add_edge(a, c);
        b.add_edge(b1, d);
        edges[i] = (a, c);
        edges[j] = (b1, d);
    }
    Some(b.build())
}

/// Bookkeeping for expression generation: current labels and adjacency of
/// the evaluated subtree, with vertex ids local to the subtree.
struct GenState {
    expr: CwExpression,
    labels: Vec<Label>,
    edges: HashSet<(usize, usize)>,
}

/// Random expression tree that is irredundant by construction: join labels
/// are only drawn from pairs with no existing edge between their classes.
/// Uses at most `width` distinct labels and exactly `leaves` leaves (one
/// random count up to `max_leaves`).
pub fn random_irredundant_expression<R: Rng>(
    rng: &mut R,
    width: u32,
    max_leaves: usize,
) -> CwExpression {
    assert!(width >= 1 && max_leaves >= 1);
    let leaves = rng.random_range(1..=max_leaves);
    let mut next_leaf = 0usize;
    gen_subtree(rng, width, leaves, &mut next_leaf).expr
}

fn gen_subtree<R: Rng>(
    rng: &mut R,
    width: u32,
    budget: usize,
    next_leaf: &mut usize,
) -> GenState {
    if budget == 1 {
        let label = rng.random_range(1..=width);
        let name = format!("v{next_leaf}");
        *next_leaf += 1;
        return GenState {
            expr: CwExpression::intro(label, name),
            labels: vec![label],
            edges: HashSet::new(),
        };
    }
    let left_budget = rng.random_range(1..budget);
    let left = gen_subtree(rng, width, left_budget, next_leaf);
    let right = gen_subtree(rng, width, budget - left_budget, next_leaf);

    let offset = left.labels.len();
    let mut labels = left.labels;
    labels.extend(&right.labels);
    let mut edges = left.edges;
    edges.extend(right.edges.iter().map(|&(u, v)| (u + offset, v + offset)));
    let mut state =
        GenState { expr: CwExpression::union(left.expr, right.expr), labels, edges };

    for _ in 0..rng.random_range(0..=3usize) {
        if width >= 2 && rng.random_bool(0.5) {
            apply_random_join(rng, width, &mut state);
        } else {
            apply_random_relabel(rng, width, &mut state);
        }
    }
    state
}

fn apply_random_relabel<R: Rng>(rng: &mut R, width: u32, state: &mut GenState) {
    let from = rng.random_range(1..=width);
    let to = rng.random_range(1..=width);
    if from == to {
        return;
    }
    state.expr = CwExpression::relabel(from, to, state.expr.clone());
    for l in &mut state.labels {
        if *l == from {
            *l = to;
        }
    }
}

fn apply_random_join<R: Rng>(rng: &mut R, width: u32, state: &mut GenState) {
    // candidate label pairs with both classes inhabited and no existing
    // edge between them, keeping the join irredundant
    let mut candidates = Vec::new();
    for a in 1..=width {
        for b in a + 1..=width {
            let class_a: Vec<usize> =
                (0..state.labels.len()).filter(|&v| state.labels[v] == a).collect();
            let class_b: Vec<usize> =
                (0..state.labels.len()).filter(|&v| state.labels[v] == b).collect();
            if class_a.is_empty() || class_b.is_empty() {
                continue;
            }
            let clean = class_a.iter().all(|&u| {
                class_b.iter().all(|&v| !state.edges.contains(&(u.min(v), u.max(v))))
            });
            if clean {
                candidates.push((a, b));
            }
        }
    }
    let Some(&(a, b)) = candidates.as_slice().choose(rng) else {
        return;
    };
    state.expr = CwExpression::join(a, b, state.expr.clone());
    let class_a: Vec<usize> = (0..state.labels.len()).filter(|&v| state.labels[v] == a).collect();
    for &u in &class_a {
        for v in 0..state.labels.len() {
            if state.labels[v] == b {
                state.edges.insert((u.min(v), u.max(v)));
            }
        }
    }
}

/// Random closed formula with fresh variable names, used for size-bound
/// and round-trip properties.
pub fn random_sentence<R: Rng>(rng: &mut R, max_depth: usize) -> Mso1Formula {
    let mut counter = 0usize;
    // open with a vertex quantifier so atoms always have something to use
    let var = fresh_vertex(&mut counter);
    let body = gen_formula(rng, max_depth, &mut vec![var.clone()], &mut Vec::new(), &mut counter);
    Mso1Formula::forall_vertex(var, body)
}

fn fresh_vertex(counter: &mut usize) -> String {
    let name = format!("x{counter}");
    *counter += 1;
    name
}

fn fresh_set(counter: &mut usize) -> String {
    let name = format!("Y{counter}");
    *counter += 1;
    name
}

fn gen_formula<R: Rng>(
    rng: &mut R,
    depth: usize,
    vvars: &mut Vec<String>,
    svars: &mut Vec<String>,
    counter: &mut usize,
) -> Mso1Formula {
    if depth == 0 {
        let pick = |rng: &mut R, vars: &Vec<String>| vars[rng.random_range(0..vars.len())].clone();
        return match rng.random_range(0..3u8) {
            0 => Mso1Formula::adj(pick(rng, vvars), pick(rng, vvars)),
            1 => Mso1Formula::eq(pick(rng, vvars), pick(rng, vvars)),
            _ if !svars.is_empty() => {
                let set = svars[rng.random_range(0..svars.len())].clone();
                Mso1Formula::member(pick(rng, vvars), set)
            }
            _ => Mso1Formula::adj(pick(rng, vvars), pick(rng, vvars)),
        };
    }
    match rng.random_range(0..9u8) {
        0 => Mso1Formula::not(gen_formula(rng, depth - 1, vvars, svars, counter)),
        1 => Mso1Formula::and(
            gen_formula(rng, depth - 1, vvars, svars, counter),
            gen_formula(rng, depth - 1, vvars, svars, counter),
        ),
        2 => Mso1Formula::or(
            gen_formula(rng, depth - 1, vvars, svars, counter),
            gen_formula(rng, depth - 1, vvars, svars, counter),
        ),
        3 => Mso1Formula::implies(
            gen_formula(rng, depth - 1, vvars, svars, counter),
            gen_formula(rng, depth - 1, vvars, svars, counter),
        ),
        4 => Mso1Formula::iff(
            gen_formula(rng, depth - 1, vvars, svars, counter),
            gen_formula(rng, depth - 1, vvars, svars, counter),
        ),
        5 | 6 => {
            let var = fresh_vertex(counter);
            vvars.push(var.clone());
            let body = gen_formula(rng, depth - 1, vvars, svars, counter);
            vvars.pop();
            if rng.random_bool(0.5) {
                Mso1Formula::exists_vertex(var, body)
            } else {
                Mso1Formula::forall_vertex(var, body)
            }
        }
        7 => {
            let var = fresh_set(counter);
            svars.push(var.clone());
            let body = gen_formula(rng, depth - 1, vvars, svars, counter);
            svars.pop();
            if rng.random_bool(0.5) {
                Mso1Formula::exists_set(var, body)
            } else {
                Mso1Formula::forall_set(var, body)
            }
        }
        _ => gen_formula(rng, 0, vvars, svars, counter),
    }
}
