//! The intersection graphs: node `x` stands for `<a^x>`, and the edge
//! labelled `t^e` from `x` leads to the `y` with
//! `t^-e <a^x> t^e ∩ <a^h> = <a^y>` (`h = 1` for the full graph, `h = m`
//! for the divisor-case graph).
//!
//! The graph is infinite and never materialized. Outside the divisor case
//! every node is `1` or `g A^α B^β` with `A = l/|n|`, `B = l/|m|`; its level
//! is `α + β` and its distance from the left (all-`t`) side is `β`.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::{self, Write as _};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::group::{is_britton_reduced, GroupParams, Sign, Word};

/// `y` with `t^-e <a^x> t^e ∩ <a> = <a^y>`.
pub fn step(p: &GroupParams, x: &BigUint, e: Sign) -> BigUint {
    let (to, from) = match e {
        Sign::Pos => (p.abs_m(), p.abs_n()),
        Sign::Neg => (p.abs_n(), p.abs_m()),
    };
    let from = BigUint::from(from);
    x / x.gcd(&from) * to
}

/// `lcm(step(x, e), h)`: the same intersection taken with `<a^h>`.
pub fn step_h(p: &GroupParams, x: &BigUint, e: Sign, h: &BigUint) -> BigUint {
    step(p, x, e).lcm(h)
}

/// Follows the `t`-letters of `path` from `start`.
pub fn trace_path(p: &GroupParams, path: &[Sign], start: &BigUint, h: &BigUint) -> BigUint {
    path.iter()
        .fold(start.clone(), |x, &e| step_h(p, &x, e, h))
}

/// For `w` freely reduced and pinch-free, returns `y` with
/// `w^-1 <a^start> w ∩ <a^h> = <a^y>`.
pub fn trace(p: &GroupParams, w: &Word, start: &BigUint, h: &BigUint) -> Result<BigUint> {
    if !is_britton_reduced(p, w) {
        return Err(Error::NotReduced(w.to_compact()));
    }
    if start.is_zero() || h.is_zero() {
        return Err(Error::domain("start and h must be positive"));
    }
    Ok(trace_path(p, &w.t_path(), start, h))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NodeShape {
    Root,
    LeftRay(u64),
    RightRay(u64),
    Interior(u64, u64),
    Unstructured,
}

impl fmt::Display for NodeShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NodeShape::Root => write!(f, "root"),
            NodeShape::LeftRay(i) => write!(f, "left({i})"),
            NodeShape::RightRay(i) => write!(f, "right({i})"),
            NodeShape::Interior(i, j) => write!(f, "interior({i},{j})"),
            NodeShape::Unstructured => write!(f, "unstructured"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OmegaNode {
    pub value: BigUint,
    pub shape: NodeShape,
    pub level: u64,
    pub dist_left: u64,
}

fn strip(mut x: BigUint, base: u64) -> (BigUint, u64) {
    let base = BigUint::from(base);
    let mut count = 0;
    loop {
        let (q, r) = x.div_rem(&base);
        if !r.is_zero() {
            return (x, count);
        }
        x = q;
        count += 1;
    }
}

/// Locates `x` in the node set. Returns [`NodeShape::Unstructured`] in the
/// divisor case, where the four families collapse.
pub fn classify_node(p: &GroupParams, x: &BigUint) -> Result<OmegaNode> {
    if x.is_zero() {
        return Err(Error::NotANode(x.to_string()));
    }
    if p.divisor_case() {
        return Ok(OmegaNode {
            value: x.clone(),
            shape: NodeShape::Unstructured,
            level: 0,
            dist_left: 0,
        });
    }
    if x.is_one() {
        return Ok(OmegaNode {
            value: x.clone(),
            shape: NodeShape::Root,
            level: 0,
            dist_left: 0,
        });
    }
    let not_a_node = || Error::NotANode(x.to_string());
    let (q, r) = x.div_rem(&BigUint::from(p.g()));
    if !r.is_zero() {
        return Err(not_a_node());
    }
    let (rest, alpha) = strip(q, p.l_over_n());
    let (rest, beta) = strip(rest, p.l_over_m());
    if !rest.is_one() || alpha + beta == 0 {
        return Err(not_a_node());
    }
    let shape = match (alpha, beta) {
        (a, 0) => NodeShape::LeftRay(a - 1),
        (0, b) => NodeShape::RightRay(b - 1),
        (a, b) => NodeShape::Interior(a - 1, b - 1),
    };
    Ok(OmegaNode {
        value: x.clone(),
        shape,
        level: alpha + beta,
        dist_left: beta,
    })
}

/// Value of the node at `level` and distance `dist` from the left side.
pub fn node_at(p: &GroupParams, level: u64, dist: u64) -> Result<BigUint> {
    if p.divisor_case() {
        return Err(Error::domain(format!("{p}: node geometry needs the non-divisor case")));
    }
    if dist > level {
        return Err(Error::domain(format!("level {level} has no node at distance {dist}")));
    }
    if level == 0 {
        return Ok(BigUint::one());
    }
    let a = BigUint::from(p.l_over_n()).pow((level - dist) as u32);
    let b = BigUint::from(p.l_over_m()).pow(dist as u32);
    Ok(BigUint::from(p.g()) * a * b)
}

/// The two outgoing edges of `x`, labelled `t` then `t^-1`.
pub fn edges_from(p: &GroupParams, x: &BigUint) -> Result<Vec<(Sign, BigUint)>> {
    classify_node(p, x)?;
    Ok(vec![
        (Sign::Pos, step(p, x, Sign::Pos)),
        (Sign::Neg, step(p, x, Sign::Neg)),
    ])
}

/// Directed BFS distance from `x` to `y`. Levels never decrease along an
/// edge, so exploration stays within levels up to `level(y)`.
pub fn shortest_path_len(p: &GroupParams, x: &BigUint, y: &BigUint) -> Result<u64> {
    if p.divisor_case() {
        return Err(Error::domain(format!("{p}: distances need the non-divisor case")));
    }
    let source = classify_node(p, x)?;
    let target = classify_node(p, y)?;
    let cap = source.level.max(target.level);
    let unreachable = || Error::Unreachable {
        from: x.to_string(),
        to: y.to_string(),
    };
    if target.level < source.level {
        return Err(unreachable());
    }

    let mut seen: HashMap<BigUint, u64> = HashMap::new();
    let mut queue = VecDeque::new();
    seen.insert(x.clone(), 0);
    queue.push_back(x.clone());
    while let Some(node) = queue.pop_front() {
        let d = seen[&node];
        if &node == y {
            return Ok(d);
        }
        for e in [Sign::Pos, Sign::Neg] {
            let next = step(p, &node, e);
            if seen.contains_key(&next) {
                continue;
            }
            // bounded search: discard nodes past the cap level
            if classify_node(p, &next)?.level > cap {
                continue;
            }
            seen.insert(next.clone(), d + 1);
            queue.push_back(next);
        }
    }
    Err(unreachable())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceGeometry {
    pub t_max: i64,
    pub mu: i64,
    pub end_node: OmegaNode,
}

impl TraceGeometry {
    /// The traced endpoint sits at level `R + t_max`, `|mu|` from the left.
    pub fn matches_prediction(&self, prefix: u64) -> bool {
        self.t_max >= 0
            && self.end_node.level == prefix + self.t_max as u64
            && self.end_node.dist_left == self.mu.unsigned_abs()
    }
}

/// Traces the `t`-letters of `t^R w` from the root and reports where the
/// path ends alongside the prefix statistics that predict it.
pub fn trace_geometry(p: &GroupParams, w: &Word, prefix: u64) -> Result<TraceGeometry> {
    if p.divisor_case() {
        return Err(Error::domain(format!("{p}: trace geometry needs the non-divisor case")));
    }
    let inverses = w.t_inverse_count() as u64;
    if prefix <= inverses {
        return Err(Error::domain(format!(
            "prefix length {prefix} must exceed the {inverses} t^-1 letters of the word"
        )));
    }
    let mut sum = 0i64;
    let mut t_max = 0i64;
    for e in w.t_path() {
        sum += e.as_i64();
        t_max = t_max.max(sum);
    }
    let mut path = vec![Sign::Pos; prefix as usize];
    path.extend(w.t_path());
    let end = trace_path(p, &path, &BigUint::one(), &BigUint::one());
    Ok(TraceGeometry {
        t_max,
        mu: sum - t_max,
        end_node: classify_node(p, &end)?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    pub nodes: Vec<OmegaNode>,
    pub edges: Vec<(BigUint, Sign, BigUint)>,
}

/// All nodes of level at most `levels` with the edges between them, ordered
/// by (level, distance from the left). In the divisor case the nodes are
/// those within `levels` steps of the root, ordered by (depth, value).
pub fn subgraph(p: &GroupParams, levels: u64) -> Result<Subgraph> {
    let mut nodes = Vec::new();
    if p.divisor_case() {
        let mut depth: BTreeMap<BigUint, u64> = BTreeMap::new();
        let mut queue = VecDeque::from([(BigUint::one(), 0u64)]);
        depth.insert(BigUint::one(), 0);
        while let Some((x, d)) = queue.pop_front() {
            if d == levels {
                continue;
            }
            for e in [Sign::Pos, Sign::Neg] {
                let y = step(p, &x, e);
                if !depth.contains_key(&y) {
                    depth.insert(y.clone(), d + 1);
                    queue.push_back((y, d + 1));
                }
            }
        }
        let mut ordered: Vec<_> = depth.into_iter().collect();
        ordered.sort_by(|(x, dx), (y, dy)| dx.cmp(dy).then(x.cmp(y)));
        for (x, d) in ordered {
            nodes.push(OmegaNode {
                value: x,
                shape: NodeShape::Unstructured,
                level: d,
                dist_left: 0,
            });
        }
    } else {
        for level in 0..=levels {
            for dist in 0..=level {
                nodes.push(classify_node(p, &node_at(p, level, dist)?)?);
            }
        }
    }
    let present: std::collections::HashSet<&BigUint> = nodes.iter().map(|n| &n.value).collect();
    let mut edges = Vec::new();
    for node in &nodes {
        for e in [Sign::Pos, Sign::Neg] {
            let y = step(p, &node.value, e);
            if present.contains(&y) {
                edges.push((node.value.clone(), e, y));
            }
        }
    }
    Ok(Subgraph { nodes, edges })
}

pub fn subgraph_dot(p: &GroupParams, levels: u64) -> Result<String> {
    let sub = subgraph(p, levels)?;
    let mut out = String::new();
    let _ = writeln!(out, "digraph omega {{");
    let _ = writeln!(out, "  // {p}, levels <= {levels}");
    for node in &sub.nodes {
        let _ = writeln!(
            out,
            "  \"{}\" [label=\"{}\\n{}\"];",
            node.value, node.value, node.shape
        );
    }
    for (x, e, y) in &sub.edges {
        let label = match e {
            Sign::Pos => "t",
            Sign::Neg => "t^-1",
        };
        let _ = writeln!(out, "  \"{x}\" -> \"{y}\" [label=\"{label}\"];");
    }
    out.push_str("}\n");
    Ok(out)
}
