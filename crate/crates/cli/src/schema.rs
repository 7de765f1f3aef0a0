//! Typed command inputs parsed from JSON with strict key checking.
//!
//! Every failure carries a JSON pointer (RFC 6901) to the offending value.

use std::fmt;

use bdcover::localfield::prime_power;
use bdcover::zlattice::QmodZ;
use serde_json::{json, Map, Value};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemaError {
    pub pointer: String,
    pub message: String,
}

impl SchemaError {
    pub fn new(pointer: impl Into<String>, message: impl Into<String>) -> Self {
        SchemaError {
            pointer: pointer.into(),
            message: message.into(),
        }
    }
}

impl fmt::Display for SchemaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = if self.pointer.is_empty() { "(root)" } else { &self.pointer };
        write!(f, "{p}: {}", self.message)
    }
}

pub type SResult<T> = Result<T, SchemaError>;

fn escape(key: &str) -> String {
    key.replace('~', "~0").replace('/', "~1")
}

pub fn child(ptr: &str, key: &str) -> String {
    format!("{ptr}/{}", escape(key))
}

fn index(ptr: &str, i: usize) -> String {
    format!("{ptr}/{i}")
}

struct Obj<'a> {
    map: &'a Map<String, Value>,
    ptr: String,
}

impl<'a> Obj<'a> {
    fn new(v: &'a Value, ptr: &str, allowed: &[&str]) -> SResult<Self> {
        let map = v.as_object().ok_or_else(|| SchemaError::new(ptr, "expected an object"))?;
        if let Some(k) = map.keys().find(|k| !allowed.contains(&k.as_str())) {
            return Err(SchemaError::new(child(ptr, k), "unknown key"));
        }
        Ok(Obj {
            map,
            ptr: ptr.to_string(),
        })
    }

    fn at(&self, key: &str) -> String {
        child(&self.ptr, key)
    }

    fn opt(&self, key: &str) -> Option<&'a Value> {
        self.map.get(key).filter(|v| !v.is_null())
    }

    fn req(&self, key: &str) -> SResult<&'a Value> {
        self.opt(key).ok_or_else(|| SchemaError::new(self.at(key), "missing required key"))
    }
}

fn int(v: &Value, ptr: &str) -> SResult<i64> {
    v.as_i64().ok_or_else(|| SchemaError::new(ptr, "expected an integer"))
}

fn uint(v: &Value, ptr: &str) -> SResult<u64> {
    v.as_u64().ok_or_else(|| SchemaError::new(ptr, "expected a nonnegative integer"))
}

fn positive(v: &Value, ptr: &str) -> SResult<u64> {
    match uint(v, ptr)? {
        0 => Err(SchemaError::new(ptr, "expected a positive integer")),
        k => Ok(k),
    }
}

fn boolean(v: &Value, ptr: &str) -> SResult<bool> {
    v.as_bool().ok_or_else(|| SchemaError::new(ptr, "expected a boolean"))
}

fn array<'a>(v: &'a Value, ptr: &str) -> SResult<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| SchemaError::new(ptr, "expected an array"))
}

fn int_vec(v: &Value, ptr: &str) -> SResult<Vec<i64>> {
    array(v, ptr)?
        .iter()
        .enumerate()
        .map(|(i, x)| int(x, &index(ptr, i)))
        .collect()
}

/// A square integer matrix given as a list of rows.
fn square(v: &Value, ptr: &str) -> SResult<Vec<Vec<i64>>> {
    let rows = array(v, ptr)?;
    if rows.is_empty() {
        return Err(SchemaError::new(ptr, "expected a nonempty matrix"));
    }
    let m: Vec<Vec<i64>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| int_vec(r, &index(ptr, i)))
        .collect::<SResult<_>>()?;
    for (i, row) in m.iter().enumerate() {
        if row.len() != m.len() {
            return Err(SchemaError::new(
                index(ptr, i),
                format!("expected {} entries in every row of a square matrix", m.len()),
            ));
        }
    }
    Ok(m)
}

fn identity(r: usize) -> Vec<Vec<i64>> {
    (0..r).map(|i| (0..r).map(|j| i64::from(i == j)).collect()).collect()
}

/// `{"rank", "frobenius", "order", "C", "n"}`; the torus keys default to the
/// split torus of the rank of `C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DatumInput {
    pub rank: usize,
    pub frobenius: Vec<Vec<i64>>,
    pub order: u64,
    pub c: Vec<Vec<i64>>,
    pub n: u64,
}

const DATUM_KEYS: [&str; 5] = ["rank", "frobenius", "order", "C", "n"];

impl DatumInput {
    fn from_obj(o: &Obj) -> SResult<Self> {
        let c = square(o.req("C")?, &o.at("C"))?;
        let n = positive(o.req("n")?, &o.at("n"))?;
        let rank = match o.opt("rank") {
            Some(v) => {
                let r = uint(v, &o.at("rank"))? as usize;
                if r != c.len() {
                    return Err(SchemaError::new(o.at("C"), format!("expected a {r}x{r} matrix")));
                }
                r
            }
            None => c.len(),
        };
        let frobenius = match o.opt("frobenius") {
            Some(v) => {
                let f = square(v, &o.at("frobenius"))?;
                if f.len() != rank {
                    return Err(SchemaError::new(o.at("frobenius"), format!("expected a {rank}x{rank} matrix")));
                }
                f
            }
            None => identity(rank),
        };
        let order = match o.opt("order") {
            Some(v) => positive(v, &o.at("order"))?,
            None => 1,
        };
        Ok(DatumInput {
            rank,
            frobenius,
            order,
            c,
            n,
        })
    }

    pub fn parse(v: &Value) -> SResult<Self> {
        DatumInput::from_obj(&Obj::new(v, "", &DATUM_KEYS)?)
    }

    fn write(&self, m: &mut Map<String, Value>) {
        m.insert("rank".into(), json!(self.rank));
        m.insert("frobenius".into(), json!(self.frobenius));
        m.insert("order".into(), json!(self.order));
        m.insert("C".into(), json!(self.c));
        m.insert("n".into(), json!(self.n));
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        self.write(&mut m);
        Value::Object(m)
    }
}

fn field_q(o: &Obj, n: u64) -> SResult<u64> {
    let q = uint(o.req("q")?, &o.at("q"))?;
    if q < 2 || prime_power(q).is_none() {
        return Err(SchemaError::new(o.at("q"), "expected a prime power"));
    }
    if (q - 1) % n != 0 {
        return Err(SchemaError::new(o.at("n"), format!("n must divide q - 1 = {}", q - 1)));
    }
    Ok(q)
}

/// A datum together with the residue field size `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverInput {
    pub q: u64,
    pub datum: DatumInput,
}

impl CoverInput {
    fn from_obj(o: &Obj) -> SResult<Self> {
        let datum = DatumInput::from_obj(o)?;
        let q = field_q(o, datum.n)?;
        Ok(CoverInput { q, datum })
    }

    fn keys(extra: &[&'static str]) -> Vec<&'static str> {
        let mut k: Vec<&str> = DATUM_KEYS.to_vec();
        k.push("q");
        k.extend_from_slice(extra);
        k
    }

    pub fn parse(v: &Value) -> SResult<Self> {
        CoverInput::from_obj(&Obj::new(v, "", &CoverInput::keys(&[]))?)
    }

    fn write(&self, m: &mut Map<String, Value>) {
        self.datum.write(m);
        m.insert("q".into(), json!(self.q));
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        self.write(&mut m);
        Value::Object(m)
    }
}

pub const MAX_HECKE_BOUND: u64 = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeInput {
    pub cover: CoverInput,
    /// Coordinates over the basis of the lattice are bounded by this.
    pub bound: u64,
}

impl HeckeInput {
    pub fn parse(v: &Value) -> SResult<Self> {
        let o = Obj::new(v, "", &CoverInput::keys(&["bound"]))?;
        let cover = CoverInput::from_obj(&o)?;
        let bound = match o.opt("bound") {
            Some(b) => uint(b, &o.at("bound"))?,
            None => 1,
        };
        if bound > MAX_HECKE_BOUND {
            return Err(SchemaError::new(o.at("bound"), format!("at most {MAX_HECKE_BOUND}")));
        }
        Ok(HeckeInput { cover, bound })
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        self.cover.write(&mut m);
        m.insert("bound".into(), json!(self.bound));
        Value::Object(m)
    }
}

/// Which genuine central character to induce from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CharacterChoice {
    /// Position in the enumerated list whose free part has values `k / free_denominator`.
    Index { index: usize, free_denominator: u64 },
    /// Values in `Q/Z` on the basis of the center lattice.
    Values(Vec<QmodZ>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrrepInput {
    pub cover: CoverInput,
    pub character: CharacterChoice,
}

impl IrrepInput {
    pub fn parse(v: &Value) -> SResult<Self> {
        let o = Obj::new(
            v,
            "",
            &CoverInput::keys(&["character", "character_index", "free_denominator"]),
        )?;
        let cover = CoverInput::from_obj(&o)?;
        let character = match o.opt("character") {
            Some(vals) => {
                if let Some(k) = ["character_index", "free_denominator"].iter().find(|k| o.opt(k).is_some()) {
                    return Err(SchemaError::new(o.at(k), "cannot be combined with \"character\""));
                }
                let ptr = o.at("character");
                let vals = array(vals, &ptr)?
                    .iter()
                    .enumerate()
                    .map(|(i, x)| {
                        let p = index(&ptr, i);
                        x.as_str()
                            .ok_or_else(|| SchemaError::new(&p, "expected a fraction string \"a/b\""))?
                            .parse::<QmodZ>()
                            .map_err(|e| SchemaError::new(&p, e.to_string()))
                    })
                    .collect::<SResult<Vec<_>>>()?;
                CharacterChoice::Values(vals)
            }
            None => CharacterChoice::Index {
                index: match o.opt("character_index") {
                    Some(v) => uint(v, &o.at("character_index"))? as usize,
                    None => 0,
                },
                free_denominator: match o.opt("free_denominator") {
                    Some(v) => positive(v, &o.at("free_denominator"))?,
                    None => 1,
                },
            },
        };
        Ok(IrrepInput { cover, character })
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        self.cover.write(&mut m);
        match &self.character {
            CharacterChoice::Index { index, free_denominator } => {
                m.insert("character_index".into(), json!(index));
                m.insert("free_denominator".into(), json!(free_denominator));
            }
            CharacterChoice::Values(vals) => {
                m.insert(
                    "character".into(),
                    Value::Array(vals.iter().map(|v| Value::String(v.to_string())).collect()),
                );
            }
        }
        Value::Object(m)
    }
}

/// `{"val", "unit_exp"}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ElementInput {
    pub val: i64,
    pub unit_exp: i64,
}

impl ElementInput {
    fn parse_at(v: &Value, ptr: &str) -> SResult<Self> {
        let o = Obj::new(v, ptr, &["val", "unit_exp"])?;
        Ok(ElementInput {
            val: int(o.req("val")?, &o.at("val"))?,
            unit_exp: int(o.req("unit_exp")?, &o.at("unit_exp"))?,
        })
    }

    fn to_json(self) -> Value {
        json!({"val": self.val, "unit_exp": self.unit_exp})
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertInput {
    pub q: u64,
    pub n: u64,
    pub a: ElementInput,
    pub b: ElementInput,
}

impl HilbertInput {
    pub fn parse(v: &Value) -> SResult<Self> {
        let o = Obj::new(v, "", &["q", "n", "a", "b"])?;
        let n = positive(o.req("n")?, &o.at("n"))?;
        let q = field_q(&o, n)?;
        Ok(HilbertInput {
            q,
            n,
            a: ElementInput::parse_at(o.req("a")?, &o.at("a"))?,
            b: ElementInput::parse_at(o.req("b")?, &o.at("b"))?,
        })
    }

    pub fn to_json(&self) -> Value {
        json!({"q": self.q, "n": self.n, "a": self.a.to_json(), "b": self.b.to_json()})
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundInput {
    pub is_split: bool,
    pub ker_sha: Option<u64>,
    pub sha_n: Option<u64>,
}

impl BoundInput {
    pub fn parse(v: &Value) -> SResult<Self> {
        let o = Obj::new(v, "", &["is_split", "ker_sha", "sha_n"])?;
        let card = |k: &str| o.opt(k).map(|v| positive(v, &o.at(k))).transpose();
        let input = BoundInput {
            is_split: boolean(o.req("is_split")?, &o.at("is_split"))?,
            ker_sha: card("ker_sha")?,
            sha_n: card("sha_n")?,
        };
        if !input.is_split {
            for (k, v) in [("ker_sha", input.ker_sha), ("sha_n", input.sha_n)] {
                if v.is_none() {
                    return Err(SchemaError::new(o.at(k), "required when is_split is false"));
                }
            }
        }
        Ok(input)
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("is_split".into(), json!(self.is_split));
        if let Some(k) = self.ker_sha {
            m.insert("ker_sha".into(), json!(k));
        }
        if let Some(k) = self.sha_n {
            m.insert("sha_n".into(), json!(k));
        }
        Value::Object(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pointers_locate_the_bad_entry() {
        let e = DatumInput::parse(&json!({"C": [[1, 0], [0, "x"]], "n": 2})).unwrap_err();
        assert_eq!(e.pointer, "/C/1/1");
        let e = DatumInput::parse(&json!({"C": [[1]], "n": 2, "extra/key": 1})).unwrap_err();
        assert_eq!(e.pointer, "/extra~1key");
        let e = HilbertInput::parse(&json!({"q": 7, "n": 2, "a": {"val": 1}, "b": {"val": 0, "unit_exp": 0}})).unwrap_err();
        assert_eq!(e.pointer, "/a/unit_exp");
        let e = CoverInput::parse(&json!({"q": 7, "n": 4, "C": [[1]]})).unwrap_err();
        assert_eq!(e.pointer, "/n");
        let e = CoverInput::parse(&json!({"q": 6, "n": 1, "C": [[1]]})).unwrap_err();
        assert_eq!(e.pointer, "/q");
    }

    #[test]
    fn datum_defaults_to_split() {
        let d = DatumInput::parse(&json!({"C": [[1, 0], [2, 1]], "n": 3})).unwrap();
        assert_eq!(d.rank, 2);
        assert_eq!(d.frobenius, identity(2));
        assert_eq!(d.order, 1);
    }

    #[test]
    fn bound_requires_cardinalities_when_nonsplit() {
        let e = BoundInput::parse(&json!({"is_split": false, "ker_sha": 2})).unwrap_err();
        assert_eq!(e.pointer, "/sha_n");
        assert!(BoundInput::parse(&json!({"is_split": true})).is_ok());
    }

    #[test]
    fn character_keys_are_exclusive() {
        let e = IrrepInput::parse(&json!({"q": 5, "n": 4, "C": [[1]], "character": ["0"], "character_index": 1}))
            .unwrap_err();
        assert_eq!(e.pointer, "/character_index");
    }
}
