//! End-to-end pipelines, sweeps and their reports.
//!
//! Every comparison becomes a [`Record`] or an [`IdentityRow`]. Rows marked
//! `asserted = false` are informational and never count as failures.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hook::{
    extended_f_coeff, f_hook, f_vector_hook, g_hook, inner_identities, reduced_f_bridge,
    reduced_f_coeff_from_blocks, reduced_f_coeff_from_matrix, reduced_g, reduced_toric_table,
    telescoping_sum, triple_product_candidate, vandermonde_extension,
};
use crate::lpm::{enumerate_bases, HookShape, LatticePathMatroid, PathPair};
use crate::poly::{IntPolynomial, LaurentPolynomial};
use crate::polytope::linalg::{fmt_rational, q};
use crate::polytope::{
    build_face_lattice, edge_metrics, enumerate_facets, incidence_vertices, polytope_json, Caps,
    EdgeMetrics, FaceLattice, Facet, Point, VertexSet,
};
use crate::toric::{toric_pairs_by_element, GradedPoset, ToricPair};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub alpha_max: usize,
    /// Defaults to `alpha_max`; hooks with `β > α` are covered by symmetry.
    pub beta_max: usize,
    pub m_max: usize,
    pub n_max: usize,
    pub caps: Caps,
    pub format: OutputFormat,
    pub out: Option<std::path::PathBuf>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            alpha_max: 4,
            beta_max: 4,
            m_max: 8,
            n_max: 8,
            caps: Caps::default(),
            format: OutputFormat::Json,
            out: None,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.alpha_max == 0 || self.beta_max == 0 {
            return Err(Error::Degenerate("alpha/beta bounds must be >= 1".into()));
        }
        if self.caps.max_vertices == 0 || self.caps.max_faces == 0 || self.caps.max_dimension == 0 {
            return Err(Error::Degenerate("caps must be positive".into()));
        }
        Ok(())
    }
}

/// Every stage of the geometric pipeline for one path pair.
#[derive(Debug, Clone)]
pub struct Pipeline {
    pub matroid: LatticePathMatroid,
    pub points: Vec<Point>,
    pub facets: Vec<Facet>,
    pub lattice: FaceLattice,
    pub poset: GradedPoset,
    /// Toric pair of `[∅, y]` for every face `y`.
    pub toric: Vec<ToricPair>,
}

impl Pipeline {
    pub fn top_pair(&self) -> &ToricPair {
        &self.toric[self.poset.top()]
    }

    pub fn metrics(&self) -> EdgeMetrics {
        edge_metrics(&self.points, &self.lattice)
    }

    pub fn h_symmetric(&self) -> bool {
        let n = self.poset.rank().saturating_sub(1);
        self.top_pair().f.is_palindromic(n)
    }
}

pub fn run_pipeline(pair: &PathPair, caps: &Caps) -> Result<Pipeline> {
    let matroid = enumerate_bases(pair, caps.max_vertices)?;
    let points = incidence_vertices(&matroid);
    let facets = enumerate_facets(&points, caps)?;
    let lattice = build_face_lattice(&points, &facets, caps)?;
    let poset = lattice.to_poset();
    let toric = toric_pairs_by_element(&poset);
    Ok(Pipeline {
        matroid,
        points,
        facets,
        lattice,
        poset,
        toric,
    })
}

/// One computed-versus-expected comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Record {
    pub instance: String,
    pub quantity: String,
    pub computed: Value,
    pub expected: Value,
    pub equal: bool,
    pub asserted: bool,
}

impl Record {
    fn check(instance: &str, quantity: &str, computed: Value, expected: Value) -> Self {
        let equal = computed == expected;
        Self {
            instance: instance.to_owned(),
            quantity: quantity.to_owned(),
            computed,
            expected,
            equal,
            asserted: true,
        }
    }

    fn info(instance: &str, quantity: &str, computed: Value) -> Self {
        Self {
            instance: instance.to_owned(),
            quantity: quantity.to_owned(),
            computed,
            expected: Value::Null,
            equal: true,
            asserted: false,
        }
    }
}

/// One evaluation of an identity. `q` holds the coefficient index `r` for the
/// coefficient comparisons and is `None` for polynomial identities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityRow {
    pub identity: String,
    pub m: i64,
    pub n: i64,
    pub q: Option<i64>,
    pub k: Option<i64>,
    pub i: Option<i64>,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
    pub asserted: bool,
    pub tag: Option<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub asserted: usize,
    pub passed: usize,
    pub failed: usize,
    pub informational: usize,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct VerificationReport {
    pub records: Vec<Record>,
    pub identity_rows: Vec<IdentityRow>,
    /// Wall time in seconds per instance.
    pub timings: BTreeMap<String, f64>,
}

impl VerificationReport {
    pub fn summary(&self) -> Summary {
        let flags = self
            .records
            .iter()
            .map(|r| (r.asserted, r.equal))
            .chain(self.identity_rows.iter().map(|r| (r.asserted, r.equal)));
        let mut s = Summary::default();
        for (asserted, equal) in flags {
            s.total += 1;
            if !asserted {
                s.informational += 1;
            } else if equal {
                s.asserted += 1;
                s.passed += 1;
            } else {
                s.asserted += 1;
                s.failed += 1;
            }
        }
        s
    }

    pub fn all_passed(&self) -> bool {
        self.summary().failed == 0
    }

    pub fn failures(&self) -> Vec<String> {
        let recs = self
            .records
            .iter()
            .filter(|r| r.asserted && !r.equal)
            .map(|r| {
                format!(
                    "{} {}: computed {} expected {}",
                    r.instance, r.quantity, r.computed, r.expected
                )
            });
        let ids = self
            .identity_rows
            .iter()
            .filter(|r| r.asserted && !r.equal)
            .map(|r| {
                format!(
                    "{} m={} n={} q={:?}: {} != {}",
                    r.identity, r.m, r.n, r.q, r.lhs, r.rhs
                )
            });
        recs.chain(ids).collect()
    }

    /// Sorted-key JSON. Timings are the only nondeterministic part and can be
    /// left out for byte-stable output.
    pub fn to_json(&self, with_timings: bool) -> Value {
        let mut v = json!({
            "records": self.records,
            "identities": self.identity_rows,
            "summary": self.summary(),
        });
        if with_timings {
            v["timings"] = json!(self.timings);
        }
        v
    }

    /// Identity rows as `m,n,q,lhs,rhs,equal,...`; otherwise one line per
    /// record.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let opt = |v: Option<i64>| v.map(|x| x.to_string()).unwrap_or_default();
        let csv_err = |e: csv::Error| Error::Degenerate(format!("csv: {e}"));
        if self.records.is_empty() {
            w.write_record([
                "m", "n", "q", "lhs", "rhs", "equal", "identity", "k", "i", "asserted", "tag",
            ])
            .map_err(csv_err)?;
            for r in &self.identity_rows {
                w.write_record([
                    r.m.to_string(),
                    r.n.to_string(),
                    opt(r.q),
                    r.lhs.clone(),
                    r.rhs.clone(),
                    r.equal.to_string(),
                    r.identity.clone(),
                    opt(r.k),
                    opt(r.i),
                    r.asserted.to_string(),
                    r.tag.clone().unwrap_or_default(),
                ])
                .map_err(csv_err)?;
            }
        } else {
            w.write_record([
                "instance", "quantity", "computed", "expected", "equal", "asserted", "seconds",
            ])
            .map_err(csv_err)?;
            for r in &self.records {
                let seconds = self
                    .timings
                    .get(&r.instance)
                    .map(|t| format!("{t:.6}"))
                    .unwrap_or_default();
                w.write_record([
                    r.instance.clone(),
                    r.quantity.clone(),
                    r.computed.to_string(),
                    r.expected.to_string(),
                    r.equal.to_string(),
                    r.asserted.to_string(),
                    seconds,
                ])
                .map_err(csv_err)?;
            }
        }
        let bytes = w
            .into_inner()
            .map_err(|e| Error::Degenerate(format!("csv: {e}")))?;
        Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
    }
}

fn poly_json(p: &IntPolynomial) -> Value {
    p.to_json()
}

fn laurent_json(p: &LaurentPolynomial) -> Value {
    p.to_json()
}

/// Matroid JSON for the pair.
pub fn cmd_bases(upper: &str, lower: &str, caps: &Caps) -> Result<Value> {
    let pair = PathPair::parse(upper, lower)?;
    Ok(enumerate_bases(&pair, caps.max_vertices)?.to_json())
}

/// Full pipeline output for one path pair. The flag tells whether the
/// asserted properties (Eulerian, symmetric h-vector) hold.
pub fn cmd_toric(upper: &str, lower: &str, caps: &Caps) -> Result<(Value, bool)> {
    let pair = PathPair::parse(upper, lower)?;
    let p = run_pipeline(&pair, caps)?;
    let fvec = p.lattice.f_vector();
    let eulerian = p.poset.is_eulerian();
    let h_symmetric = p.h_symmetric();
    let top = p.top_pair();
    let metrics = p.metrics();
    let value = json!({
        "matroid": p.matroid.to_json(),
        "polytope": polytope_json(&p.points, &p.facets, &fvec),
        "f_vector": fvec.0,
        "toric_f": poly_json(&top.f),
        "toric_g": poly_json(&top.g),
        "h_symmetric": h_symmetric,
        "eulerian": eulerian,
        "edge_metrics": metrics.to_json(),
    });
    Ok((value, eulerian && h_symmetric))
}

/// Base facet of a hook pyramid: all vertices except the apex.
fn base_facet(p: &Pipeline, hook: &HookShape) -> Option<usize> {
    let apex = hook.apex_basis();
    let apex_index = p.matroid.bases.iter().position(|b| *b == apex)?;
    let mut base = VertexSet::full(p.points.len());
    base.0 &= !(1u64 << apex_index);
    p.lattice.index_of(base)
}

fn hook_records(alpha: usize, beta: usize, caps: &Caps) -> Result<Vec<Record>> {
    let id = format!("hook({alpha},{beta})");
    let hook = HookShape::new(alpha, beta)?;
    let p = run_pipeline(&hook.path_pair(), caps)?;
    let top = p.top_pair().clone();
    let metrics = p.metrics();
    let fvec = p.lattice.f_vector();
    let simplex = alpha.min(beta) == 1;
    let two = json!([fmt_rational(&q(2))]);

    let mut out = vec![
        Record::check(
            &id,
            "vertex_count",
            json!(p.points.len()),
            json!(alpha * beta + 1),
        ),
        Record::check(
            &id,
            "f_vector",
            json!(fvec.0),
            json!(f_vector_hook(alpha, beta)?.0),
        ),
        Record::check(
            &id,
            "euler_relation",
            json!(fvec.alternating_sum()),
            json!(1),
        ),
        Record::check(
            &id,
            "toric_f",
            poly_json(&top.f),
            poly_json(&f_hook(alpha, beta)),
        ),
        Record::check(
            &id,
            "toric_g",
            poly_json(&top.g),
            poly_json(&g_hook(alpha, beta)),
        ),
        Record::check(
            &id,
            "squared_edge_lengths",
            json!(metrics
                .squared_lengths
                .iter()
                .map(fmt_rational)
                .collect::<Vec<_>>()),
            two,
        ),
        // A hook with a unit arm is a simplex, where both diameters shrink.
        Record::check(
            &id,
            "graph_diameter",
            json!(metrics.graph_diameter),
            json!(if simplex { 1 } else { 2 }),
        ),
        Record::check(
            &id,
            "max_squared_distance",
            json!(fmt_rational(&metrics.max_squared_distance)),
            json!(fmt_rational(&q(if simplex { 2 } else { 4 }))),
        ),
        Record::check(&id, "eulerian", json!(p.poset.is_eulerian()), json!(true)),
        Record::check(
            &id,
            "diamond_property",
            json!(p.poset.has_diamond_property()),
            json!(true),
        ),
        Record::check(&id, "h_symmetric", json!(p.h_symmetric()), json!(true)),
        Record::info(&id, "lattice_size", json!(p.lattice.len())),
    ];

    match base_facet(&p, &hook) {
        Some(b) => {
            let reduced = &p.toric[b];
            let pyramid = &reduced.g + &reduced.f.shift(1);
            out.push(Record::check(
                &id,
                "pyramid_relation",
                poly_json(&top.f),
                poly_json(&pyramid),
            ));
            out.push(Record::check(
                &id,
                "base_facet_g",
                poly_json(&reduced.g),
                poly_json(&reduced_g(hook.m(), hook.n())),
            ));
        }
        None => out.push(Record::check(
            &id,
            "pyramid_relation",
            Value::Null,
            json!("base facet present"),
        )),
    }
    Ok(out)
}

/// Geometric pipeline against the closed forms for every `1 <= β <= α <= alpha_max`
/// with `β <= beta_max`.
pub fn verify_hooks(config: &SweepConfig) -> Result<VerificationReport> {
    config.validate()?;
    let shapes: Vec<(usize, usize)> = (1..=config.alpha_max)
        .flat_map(|a| (1..=a.min(config.beta_max)).map(move |b| (a, b)))
        .collect();
    let results: Vec<(String, f64, Result<Vec<Record>>)> = shapes
        .par_iter()
        .map(|&(a, b)| {
            let start = Instant::now();
            let recs = hook_records(a, b, &config.caps);
            (
                format!("hook({a},{b})"),
                start.elapsed().as_secs_f64(),
                recs,
            )
        })
        .collect();
    let mut report = VerificationReport::default();
    for (id, secs, recs) in results {
        report.records.extend(recs?);
        report.timings.insert(id, secs);
    }
    report
        .records
        .sort_by(|x, y| (&x.instance, &x.quantity).cmp(&(&y.instance, &y.quantity)));
    Ok(report)
}

fn row(identity: &str, m: i64, n: i64, q: Option<i64>, lhs: String, rhs: String) -> IdentityRow {
    IdentityRow {
        identity: identity.to_owned(),
        m,
        n,
        q,
        k: None,
        i: None,
        equal: lhs == rhs,
        lhs,
        rhs,
        asserted: true,
        tag: None,
    }
}

fn identity_rows_for(m: usize, n: usize, table: &[Vec<ToricPair>]) -> Result<Vec<IdentityRow>> {
    let (mi, ni) = (m as i64, n as i64);
    let mut rows = Vec::new();

    // Main identity on the verified range, plus a few rows either side.
    for q in -3..=mi + ni + 2 {
        let sides = vandermonde_extension(mi, ni, q);
        let mut r = row(
            "vandermonde_extension",
            mi,
            ni,
            Some(q),
            sides.lhs.to_string(),
            sides.rhs.to_string(),
        );
        if !(-1..=mi + ni).contains(&q) {
            r.asserted = false;
            r.tag = Some("out_of_range".into());
        } else if q == mi + ni {
            r.tag = Some("vandermonde".into());
        }
        rows.push(r);
    }

    for q in -1..=mi + ni {
        for k in 0..=ni {
            for i in 0..=ni - k {
                let [first, second, third] = inner_identities(mi, ni, q, k, i);
                let mut r = row(
                    "inner_sum_j",
                    mi,
                    ni,
                    Some(q),
                    first.lhs.to_string(),
                    first.rhs.to_string(),
                );
                r.k = Some(k);
                r.i = Some(i);
                rows.push(r);
                if i == 0 {
                    let mut r = row(
                        "inner_sum_i",
                        mi,
                        ni,
                        Some(q),
                        second.lhs.to_string(),
                        second.rhs.to_string(),
                    );
                    r.k = Some(k);
                    rows.push(r);
                }
                if k == 0 && i == 0 {
                    rows.push(row(
                        "inner_sum_k",
                        mi,
                        ni,
                        Some(q),
                        third.lhs.to_string(),
                        third.rhs.to_string(),
                    ));
                }
            }
        }
    }

    let shifted = table[m][n].f.substitute_shift(1);
    for r in 0..=mi + ni {
        let a = reduced_f_coeff_from_matrix(m, n, r);
        let b = reduced_f_coeff_from_blocks(m, n, r);
        rows.push(row(
            "coeff_matrix_vs_blocks",
            mi,
            ni,
            Some(r),
            a.to_string(),
            b.to_string(),
        ));
        rows.push(row(
            "coeff_blocks_vs_recursion",
            mi,
            ni,
            Some(r),
            b.to_string(),
            shifted.coeff(r as usize).to_string(),
        ));
    }
    rows.push(row(
        "extended_leading_coeff",
        mi,
        ni,
        Some(mi + ni),
        extended_f_coeff(m, n, mi + ni).to_string(),
        BigInt::from(1).to_string(),
    ));

    let bridge = reduced_f_bridge(m, n)?;
    rows.push(row(
        "laurent_bridge",
        mi,
        ni,
        None,
        laurent_json(&bridge).to_string(),
        laurent_json(&LaurentPolynomial::from(shifted)).to_string(),
    ));

    let tele = telescoping_sum(m, n);
    rows.push(row(
        "telescoping_sum",
        mi,
        ni,
        None,
        poly_json(&tele).to_string(),
        poly_json(&IntPolynomial::monomial(BigInt::from(1), m + n)).to_string(),
    ));
    Ok(rows)
}

/// Identity suite over `0 <= n <= m <= m_max`, `n <= n_max`.
pub fn verify_identities(config: &SweepConfig) -> Result<VerificationReport> {
    let table = reduced_toric_table(config.m_max, config.m_max.min(config.n_max));
    let pairs: Vec<(usize, usize)> = (0..=config.m_max)
        .flat_map(|m| (0..=m.min(config.n_max)).map(move |n| (m, n)))
        .collect();
    let results: Vec<(String, f64, Result<Vec<IdentityRow>>)> = pairs
        .par_iter()
        .map(|&(m, n)| {
            let start = Instant::now();
            let rows = identity_rows_for(m, n, &table);
            (format!("m={m},n={n}"), start.elapsed().as_secs_f64(), rows)
        })
        .collect();
    let mut report = VerificationReport::default();
    for (id, secs, rows) in results {
        report.identity_rows.extend(rows?);
        report.timings.insert(id, secs);
    }
    report.identity_rows.sort_by(|x, y| {
        (&x.identity, x.m, x.n, x.q, x.k, x.i).cmp(&(&y.identity, y.m, y.n, y.q, y.k, y.i))
    });
    Ok(report)
}

/// Toric g of a border strip against the triple-product candidate. The
/// comparison is recorded, not asserted; the flag tells whether the lattice
/// was Eulerian with a symmetric h-vector.
pub fn border_strip(a: usize, b: usize, c: usize, caps: &Caps) -> Result<(Value, bool)> {
    let pair = PathPair::border_strip(a, b, c)?;
    let p = run_pipeline(&pair, caps)?;
    let top = p.top_pair();
    let candidate = triple_product_candidate(a, b, c);
    let sane = p.poset.is_eulerian() && p.h_symmetric();
    let value = json!({
        "shape": [a, b, c],
        "upper": pair.upper().to_string(),
        "lower": pair.lower().to_string(),
        "f_vector": p.lattice.f_vector().0,
        "toric_f": poly_json(&top.f),
        "toric_g_actual": poly_json(&top.g),
        "toric_g_display": top.g.to_string(),
        "product_formula": poly_json(&candidate),
        "equal": top.g == candidate,
        "eulerian": p.poset.is_eulerian(),
        "h_symmetric": p.h_symmetric(),
    });
    Ok((value, sane))
}
