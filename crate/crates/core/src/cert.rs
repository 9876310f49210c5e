//! Certificate JSON for the five model kinds.
//!
//! Rationals are `[num, den]` pairs except in blue-red intervals, which use the
//! flat `[lo_num, lo_den, hi_num, hi_den]` layout. Leafless spine nodes of a
//! linear leaf root appear as `null` in both `spine` and `f`.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linear::{verify_bluered_model, verify_linear_leafroot, BlueRedModel, Color, Leg, LinearLeafRoot, RatInterval};
use crate::nes::{verify_nes_model, Ball, EmbeddedTree, NesModel, TreePoint};
use crate::partition::Partition;
use crate::rational::{self, Rational};
use crate::star::{validate_good_partition, verify_star_model, BlockInterval, GoodPartition, StarNesModel};
use crate::verify::Discrepancy;

pub const KINDS: [&str; 5] = ["bluered", "linear-leafroot", "star-nes", "nes-model", "good-partition"];

/// A good partition by vertex names, independent of any graph's indexing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedGoodPartition {
    pub x: Vec<String>,
    pub blocks: Vec<Vec<String>>,
    pub permutation: Vec<String>,
}

impl NamedGoodPartition {
    pub fn from_indexed(g: &Graph, gp: &GoodPartition) -> Self {
        Self {
            x: g.set_names(&gp.x),
            blocks: gp.blocks.blocks().iter().map(|b| g.set_names(b)).collect(),
            permutation: gp.permutation.iter().map(|&v| g.name(v).to_owned()).collect(),
        }
    }

    /// Resolves names against `g`; the permutation is kept as given.
    pub fn to_indexed(&self, g: &Graph) -> Result<GoodPartition> {
        let x = g.vertex_set(&self.x)?;
        let blocks = self.blocks.iter().map(|b| g.vertex_set(b)).collect::<Result<Vec<_>>>()?;
        let ground = g.all().difference(&x);
        let blocks = Partition::new(ground, blocks)?;
        let permutation = self.permutation.iter().map(|v| g.index_of(v).ok_or_else(|| Error::UnknownVertex(v.clone()))).collect::<Result<_>>()?;
        Ok(GoodPartition { x, blocks, permutation })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    BlueRed(BlueRedModel),
    LinearLeafRoot(LinearLeafRoot),
    StarNes(StarNesModel),
    Nes(NesModel),
    GoodPartition(NamedGoodPartition),
}

/// Outcome of checking a certificate against a graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct CertificateReport {
    pub valid: bool,
    pub discrepancies: Vec<Discrepancy>,
    /// Structural problem when the certificate is not a model comparison.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

fn r(v: &Rational) -> Value {
    rational::to_json(v)
}

fn field<'a>(obj: &'a Value, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| Error::Parse(format!("missing field `{key}`")))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| Error::Parse(format!("`{what}` must be an array")))
}

fn object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| Error::Parse(format!("`{what}` must be an object")))
}

fn string(v: &Value, what: &str) -> Result<String> {
    v.as_str().map(str::to_owned).ok_or_else(|| Error::Parse(format!("`{what}` must be a string")))
}

fn strings(v: &Value, what: &str) -> Result<Vec<String>> {
    array(v, what)?.iter().map(|s| string(s, what)).collect()
}

fn index(v: &Value, what: &str) -> Result<usize> {
    v.as_u64().map(|n| n as usize).ok_or_else(|| Error::Parse(format!("`{what}` must be a nonnegative integer")))
}

fn rationals(v: &Value, what: &str) -> Result<Vec<Rational>> {
    array(v, what)?.iter().map(rational::from_json).collect()
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::BlueRed(_) => "bluered",
            Certificate::LinearLeafRoot(_) => "linear-leafroot",
            Certificate::StarNes(_) => "star-nes",
            Certificate::Nes(_) => "nes-model",
            Certificate::GoodPartition(_) => "good-partition",
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Certificate::BlueRed(m) => {
                let intervals: Map<String, Value> = m
                    .intervals
                    .iter()
                    .map(|(v, (_, i))| {
                        let mut parts = Vec::with_capacity(4);
                        rational::push_parts(&mut parts, &i.lo);
                        rational::push_parts(&mut parts, &i.hi);
                        (v.clone(), Value::Array(parts))
                    })
                    .collect();
                json!({"kind": "bluered", "blue": m.vertices_of(Color::Blue), "red": m.vertices_of(Color::Red), "intervals": intervals})
            }
            Certificate::LinearLeafRoot(root) => {
                let spine: Vec<Value> = root.legs.iter().map(|l| l.as_ref().map_or(Value::Null, |l| Value::from(l.vertex.clone()))).collect();
                let f: Vec<Value> = root.legs.iter().map(|l| l.as_ref().map_or(Value::Null, |l| r(&l.weight))).collect();
                let e: Vec<Value> = root.spine_weights.iter().map(r).collect();
                json!({"kind": "linear-leafroot", "spine": spine, "e": e, "f": f})
            }
            Certificate::StarNes(m) => {
                let central: Map<String, Value> = m.central.iter().map(|(v, reach)| (v.clone(), Value::Array(reach.iter().map(r).collect()))).collect();
                let blocks: Map<String, Value> =
                    m.blocks.iter().map(|(v, b)| (v.clone(), json!({"ray": b.ray, "s": r(&b.start), "t": r(&b.end)}))).collect();
                json!({"kind": "star-nes", "rays": m.ray_lengths.iter().map(r).collect::<Vec<_>>(), "central": central, "blocks": blocks})
            }
            Certificate::Nes(m) => {
                let edges: Vec<Value> = m.tree.edges.iter().map(|(a, b, len)| json!([a, b, r(len)])).collect();
                let balls: Map<String, Value> = m
                    .balls
                    .iter()
                    .map(|(v, ball)| {
                        let center = match &ball.center {
                            TreePoint::Node(n) => json!({"node": n}),
                            TreePoint::OnEdge { edge, offset } => json!({"edge": edge, "offset": r(offset)}),
                        };
                        (v.clone(), json!({"center": center, "radius": r(&ball.radius)}))
                    })
                    .collect();
                json!({"kind": "nes-model", "tree": {"nodes": m.tree.nodes, "edges": edges}, "balls": balls})
            }
            Certificate::GoodPartition(gp) => {
                json!({"kind": "good-partition", "X": gp.x, "blocks": gp.blocks, "permutation": gp.permutation})
            }
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("certificate serializes")
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json(&value)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let kind = string(field(v, "kind")?, "kind")?;
        match kind.as_str() {
            "bluered" => {
                let blue = strings(field(v, "blue")?, "blue")?;
                let red = strings(field(v, "red")?, "red")?;
                let intervals = object(field(v, "intervals")?, "intervals")?;
                let mut model = BlueRedModel::default();
                for (color, names) in [(Color::Blue, &blue), (Color::Red, &red)] {
                    for name in names {
                        let parts = array(intervals.get(name).ok_or_else(|| Error::Parse(format!("no interval for `{name}`")))?, "interval")?;
                        if parts.len() != 4 {
                            return Err(Error::Parse(format!("interval of `{name}` needs 4 integers")));
                        }
                        let lo = rational::from_parts(&parts[0], &parts[1])?;
                        let hi = rational::from_parts(&parts[2], &parts[3])?;
                        if model.get(name).is_some() {
                            return Err(Error::Parse(format!("`{name}` is listed twice")));
                        }
                        model.insert(name.clone(), color, RatInterval::new(lo, hi)?);
                    }
                }
                if let Some(extra) = intervals.keys().find(|k| model.get(k).is_none()) {
                    return Err(Error::Parse(format!("interval for `{extra}` which is neither blue nor red")));
                }
                Ok(Certificate::BlueRed(model))
            }
            "linear-leafroot" => {
                let spine = array(field(v, "spine")?, "spine")?;
                let f = array(field(v, "f")?, "f")?;
                if spine.len() != f.len() {
                    return Err(Error::Parse("`spine` and `f` differ in length".into()));
                }
                let legs = spine
                    .iter()
                    .zip(f)
                    .map(|(s, w)| match (s, w) {
                        (Value::Null, Value::Null) => Ok(None),
                        (Value::String(name), w) => Ok(Some(Leg { vertex: name.clone(), weight: rational::from_json(w)? })),
                        _ => Err(Error::Parse("spine entries are names (with an `f` weight) or null (with null)".into())),
                    })
                    .collect::<Result<_>>()?;
                let root = LinearLeafRoot { legs, spine_weights: rationals(field(v, "e")?, "e")? };
                root.check_shape()?;
                Ok(Certificate::LinearLeafRoot(root))
            }
            "star-nes" => {
                let ray_lengths = rationals(field(v, "rays")?, "rays")?;
                let central = object(field(v, "central")?, "central")?
                    .iter()
                    .map(|(k, reach)| Ok((k.clone(), rationals(reach, "central")?)))
                    .collect::<Result<BTreeMap<_, _>>>()?;
                let blocks = object(field(v, "blocks")?, "blocks")?
                    .iter()
                    .map(|(k, b)| {
                        Ok((
                            k.clone(),
                            BlockInterval {
                                ray: index(field(b, "ray")?, "ray")?,
                                start: rational::from_json(field(b, "s")?)?,
                                end: rational::from_json(field(b, "t")?)?,
                            },
                        ))
                    })
                    .collect::<Result<BTreeMap<_, _>>>()?;
                let model = StarNesModel { ray_lengths, central, blocks };
                model.check_shape()?;
                Ok(Certificate::StarNes(model))
            }
            "nes-model" => {
                let tree = field(v, "tree")?;
                let edges = array(field(tree, "edges")?, "edges")?
                    .iter()
                    .map(|e| match e.as_array().map(Vec::as_slice) {
                        Some([a, b, len]) => Ok((index(a, "edge")?, index(b, "edge")?, rational::from_json(len)?)),
                        _ => Err(Error::Parse("tree edges are [a, b, length]".into())),
                    })
                    .collect::<Result<_>>()?;
                let tree = EmbeddedTree { nodes: index(field(tree, "nodes")?, "nodes")?, edges };
                let balls = object(field(v, "balls")?, "balls")?
                    .iter()
                    .map(|(k, b)| {
                        let c = field(b, "center")?;
                        let center = if let Some(n) = c.get("node") {
                            TreePoint::Node(index(n, "node")?)
                        } else {
                            let edge = index(field(c, "edge")?, "edge")?;
                            let offset = rational::from_json(field(c, "offset")?)?;
                            tree.point_on_edge(edge, offset)?
                        };
                        Ok((k.clone(), Ball { center, radius: rational::from_json(field(b, "radius")?)? }))
                    })
                    .collect::<Result<BTreeMap<_, _>>>()?;
                let model = NesModel { tree, balls };
                model.check_shape()?;
                Ok(Certificate::Nes(model))
            }
            "good-partition" => Ok(Certificate::GoodPartition(NamedGoodPartition {
                x: strings(field(v, "X")?, "X")?,
                blocks: array(field(v, "blocks")?, "blocks")?.iter().map(|b| strings(b, "blocks")).collect::<Result<_>>()?,
                permutation: strings(field(v, "permutation")?, "permutation")?,
            })),
            other => Err(Error::Parse(format!("unknown certificate kind `{other}` (expected one of {})", KINDS.join(", ")))),
        }
    }

    /// Checks the certificate against `g`. Model kinds compare adjacency;
    /// a good partition is checked property by property, including the given
    /// permutation.
    pub fn verify(&self, g: &Graph) -> Result<CertificateReport> {
        let from = |v: crate::verify::Verification| CertificateReport { valid: v.is_valid(), discrepancies: v.discrepancies, reason: None };
        match self {
            Certificate::BlueRed(m) => verify_bluered_model(g, m).map(from),
            Certificate::LinearLeafRoot(m) => verify_linear_leafroot(g, m).map(from),
            Certificate::StarNes(m) => verify_star_model(g, m).map(from),
            Certificate::Nes(m) => verify_nes_model(g, m).map(from),
            Certificate::GoodPartition(named) => {
                let gp = named.to_indexed(g)?;
                let fail = |reason: String| CertificateReport { valid: false, discrepancies: Vec::new(), reason: Some(reason) };
                if let Err(f) = validate_good_partition(g, &gp.x, &gp.blocks) {
                    return Ok(fail(f.describe(g)));
                }
                let mut sorted = gp.permutation.clone();
                sorted.sort_unstable();
                if sorted != gp.x.iter().collect::<Vec<_>>() {
                    return Ok(fail("permutation is not an ordering of X".into()));
                }
                if !crate::star::is_good_permutation(g, &gp.x, &gp.blocks, &gp.permutation) {
                    return Ok(fail("permutation is not a good elimination order".into()));
                }
                Ok(CertificateReport { valid: true, ..Default::default() })
            }
        }
    }
}
