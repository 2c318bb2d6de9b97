//! Finitely supported maps Partition → QLaurent: elements of Λ written in the
//! Schur basis. The universal output type of every operator in the crate.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Number, Value};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::qlaurent::QLaurent;

/// A Schur expansion Σ_μ c_μ(q) s_μ. Zero-valued entries are never stored,
/// so structural equality is semantic equality. Iteration and serialization
/// use the canonical order: decreasing lexicographic on padded parts, a
/// dominance-compatible total order.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, QLaurent>,
}

impl SchurExpansion {
    pub fn zero() -> Self {
        SchurExpansion::default()
    }

    /// The single Schur function s_μ.
    pub fn schur(mu: Partition) -> Self {
        let mut e = SchurExpansion::zero();
        e.add_term(mu, QLaurent::one());
        e
    }

    /// The constant 1 = s_∅.
    pub fn one() -> Self {
        SchurExpansion::schur(Partition::empty())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of partitions with nonzero coefficient.
    pub fn num_partitions(&self) -> usize {
        self.terms.len()
    }

    /// Total number of monomials q^k s_μ with nonzero coefficient.
    pub fn num_monomials(&self) -> usize {
        self.terms.values().map(QLaurent::num_terms).sum()
    }

    /// Coefficient of s_μ (zero if absent).
    pub fn coeff(&self, mu: &Partition) -> QLaurent {
        self.terms.get(mu).cloned().unwrap_or_else(QLaurent::zero)
    }

    /// Add w · s_μ, dropping the entry if the result cancels.
    pub fn add_term(&mut self, mu: Partition, w: QLaurent) {
        if w.is_zero() {
            return;
        }
        let entry = self.terms.entry(mu);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(w);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &w;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// self += w · other. The merge is associative and commutative, so any
    /// reduction order over partial sums gives the same expansion.
    pub fn add_scaled(&mut self, other: &SchurExpansion, w: &QLaurent) {
        if w.is_zero() {
            return;
        }
        for (mu, c) in &other.terms {
            self.add_term(mu.clone(), c * w);
        }
    }

    pub fn add(&mut self, other: &SchurExpansion) {
        for (mu, c) in &other.terms {
            self.add_term(mu.clone(), c.clone());
        }
    }

    pub fn scale(&self, w: &QLaurent) -> SchurExpansion {
        let mut out = SchurExpansion::zero();
        out.add_scaled(self, w);
        out
    }

    /// Re-key every term by the conjugate partition (the involution ω on the
    /// Schur basis), weights unchanged.
    pub fn map_conjugate(&self) -> SchurExpansion {
        let mut out = SchurExpansion::zero();
        for (mu, c) in &self.terms {
            out.add_term(mu.conjugate(), c.clone());
        }
        out
    }

    /// Terms in canonical order (decreasing lexicographic on padded parts).
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &QLaurent)> {
        self.terms.iter().rev()
    }

    /// Partitions with nonzero coefficient, canonical order.
    pub fn partitions(&self) -> impl Iterator<Item = &Partition> {
        self.terms.keys().rev()
    }

    /// JSON form: an array of {"partition": [...], "coeff": {"lo":..,
    /// "coeffs":[...]}} objects in canonical order.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.iter()
                .map(|(mu, c)| {
                    json!({
                        "partition": mu.parts(),
                        "coeff": qlaurent_to_json(c),
                    })
                })
                .collect(),
        )
    }

    pub fn to_json_string(&self) -> String {
        self.to_json().to_string()
    }

    pub fn from_json(v: &Value) -> Result<SchurExpansion> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Json("expected array of terms".into()))?;
        let mut out = SchurExpansion::zero();
        for item in arr {
            let mu_val = item
                .get("partition")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Json("term missing partition array".into()))?;
            let parts = mu_val
                .iter()
                .map(|p| {
                    p.as_i64()
                        .ok_or_else(|| Error::Json("partition part not an integer".into()))
                })
                .collect::<Result<Vec<i64>>>()?;
            let mu = Partition::new(parts).map_err(|e| Error::Json(e.to_string()))?;
            let coeff = item
                .get("coeff")
                .ok_or_else(|| Error::Json("term missing coeff".into()))?;
            out.add_term(mu, qlaurent_from_json(coeff)?);
        }
        Ok(out)
    }

    pub fn from_json_str(s: &str) -> Result<SchurExpansion> {
        let v: Value = serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))?;
        SchurExpansion::from_json(&v)
    }
}

/// {"lo": int, "coeffs": [int, ...]}; coefficients are emitted as JSON
/// numbers of arbitrary precision.
pub fn qlaurent_to_json(c: &QLaurent) -> Value {
    let coeffs: Vec<Value> = if c.is_zero() {
        Vec::new()
    } else {
        (c.lo()..=c.hi())
            .map(|k| {
                let n = Number::from_str(&c.coeff(k).to_string())
                    .expect("integer string is a valid JSON number");
                Value::Number(n)
            })
            .collect()
    };
    json!({ "lo": c.lo(), "coeffs": coeffs })
}

pub fn qlaurent_from_json(v: &Value) -> Result<QLaurent> {
    let lo = v
        .get("lo")
        .and_then(Value::as_i64)
        .ok_or_else(|| Error::Json("coeff missing lo".into()))?;
    let arr = v
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Json("coeff missing coeffs array".into()))?;
    let coeffs = arr
        .iter()
        .map(|x| match x {
            Value::Number(n) => n
                .to_string()
                .parse::<BigInt>()
                .map_err(|_| Error::Json(format!("bad coefficient {}", n))),
            _ => Err(Error::Json("coefficient not a number".into())),
        })
        .collect::<Result<Vec<BigInt>>>()?;
    Ok(QLaurent::from_coeffs(lo, coeffs))
}

/// One term per line: `+ s[2,2,1]`, `- q s[1,1]`, `+ (q^3-q^2) s[2]`.
/// The zero expansion prints as `0`.
impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (mu, c) in self.iter() {
            if !first {
                writeln!(f)?;
            }
            first = false;
            write!(f, "{} s{}", format_coeff(c), mu)?;
        }
        Ok(())
    }
}

fn format_coeff(c: &QLaurent) -> String {
    if c.num_terms() == 1 {
        let (e, coef) = c.terms().next().expect("one term");
        let (sign, mag) = if coef < &BigInt::from(0) {
            ("-", -coef)
        } else {
            ("+", coef.clone())
        };
        let mut s = sign.to_string();
        let mag_one = mag == BigInt::from(1);
        if !mag_one {
            s.push_str(&format!(" {}", mag));
        }
        if e == 1 {
            s.push_str(if mag_one { " q" } else { "*q" });
        } else if e != 0 {
            s.push_str(&if mag_one {
                format!(" q^{}", e)
            } else {
                format!("*q^{}", e)
            });
        }
        s
    } else {
        format!("+ ({})", c)
    }
}

impl fmt::Debug for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SchurExpansion{{")?;
        for (i, (mu, c)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}: {}", mu, c)?;
        }
        write!(f, "}}")
    }
}
