//! JSON and text rendering of analysis results.
//!
//! JSON objects use `serde_json`'s sorted maps, so key order (and hence the
//! whole output) is deterministic. Rationals print as `p/q` or as integers.

use std::fmt::Write;

use hkc_core::transforms::{ExtensionReport, TorsionWitness};
use hkc_core::{HkProfile, NumericalSemigroup, Precision, RingReport, Series};
use serde_json::{json, Value};

/// Series text, cut at `t^limit` (shown as `+ O(t^limit)`) when it has
/// terms at or beyond it.
pub fn series_text(s: &Series, limit: Option<usize>) -> String {
    match limit {
        Some(l) if s.max_exponent().is_some_and(|e| e >= l) || !s.is_exact() => {
            let cut = match s.prec() {
                Precision::Finite(p) => p.min(l),
                Precision::Exact => l,
            };
            s.with_precision(Precision::Finite(cut)).to_string()
        }
        _ => s.to_string(),
    }
}

pub fn series_list(gens: &[Series], limit: Option<usize>) -> Vec<String> {
    gens.iter().map(|g| series_text(g, limit)).collect()
}

pub fn semigroup_json(s: &NumericalSemigroup) -> Value {
    json!({
        "min_generators": s.min_generators(),
        "conductor": s.conductor(),
        "genus": s.genus(),
    })
}

/// Display threshold for generator series: `c_R + mult(R)`.
pub fn display_limit(r: &RingReport) -> usize {
    r.conductor_degree + r.multiplicity
}

pub fn witness_json(w: &TorsionWitness) -> Value {
    json!({
        "a1": w.a1,
        "an": w.an,
        "x1": w.x1.to_string(),
        "xn": w.xn.to_string(),
        "omega": w.omega_text,
        "image_in_normalization": w.image_in_normalization.to_string(),
        "generators": series_list(w.parametrization.gens(), None),
        "substitution": w.substitution.to_string(),
        "nonzero_torsion": "cited criterion, not recomputed",
    })
}

pub fn extension_json(e: &ExtensionReport) -> Value {
    json!({
        "b_list": e.b_list,
        "s": e.b_list.len(),
        "s_generators": series_list(e.s_gens.gens(), None),
        "c_s": e.c_s,
        "hk_sequence_s": e.hk_s.sequence,
        "i0": e.i0,
        "chosen_generators": series_list(e.chosen_generators.gens(), None),
        "value_semigroup_s": semigroup_json(&e.value_semigroup_s),
    })
}

pub fn hk_json(hk: &HkProfile, limit: Option<usize>) -> Value {
    let certificates = hk
        .certificates
        .as_ref()
        .map(|c| c.iter().map(ToString::to_string).collect::<Vec<_>>());
    let index = hk
        .input_index
        .as_ref()
        .map(|i| i.iter().map(|k| k + 1).collect::<Vec<_>>());
    json!({
        "hk_sequence": hk.sequence,
        "hk_generators": series_list(&hk.generators, limit),
        "certificates": certificates,
        "input_index": index,
    })
}

/// The full `analyze` report.
pub fn analysis_json(
    raw: &[Series],
    r: &RingReport,
    hk: &HkProfile,
    witness: Option<&TorsionWitness>,
    extension: Option<&ExtensionReport>,
) -> Value {
    let limit = display_limit(r);
    json!({
        "generators": series_list(raw, None),
        "multiplicity": r.multiplicity,
        "value_semigroup": semigroup_json(&r.value_semigroup),
        "hk_sequence": r.hk.sequence,
        "hk_generators": series_list(&hk.generators, Some(limit)),
        "hk_generators_display_cut": limit,
        "embedding_dimension": r.embedding_dimension,
        "conductor_degree": r.conductor_degree,
        "conductor_in_m2": r.conductor_in_m2,
        "conductor_not_in_m2": !r.conductor_in_m2,
        "reduced_type": { "s": r.reduced_type.s, "b_list": r.reduced_type.b_list },
        "torsion_witness": witness.map(witness_json),
        "extension": extension.map(extension_json),
        "precision_used": r.precision(),
    })
}

fn list<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn semigroup_text(out: &mut String, s: &NumericalSemigroup) {
    let _ = writeln!(out, "value semigroup: <{}>", list(s.min_generators()));
    let _ = writeln!(out, "conductor: {}  genus: {}", s.conductor(), s.genus());
}

pub fn witness_text(out: &mut String, w: &TorsionWitness) {
    let _ = writeln!(out, "torsion witness: {}", w.omega_text);
    let _ = writeln!(out, "  x1 = {}, xn = {}", w.x1, w.xn);
    let _ = writeln!(out, "  image in k[[t]]dt: {}", w.image_in_normalization);
    let _ = writeln!(out, "  generators: {}", list(w.parametrization.gens()));
    let _ = writeln!(out, "  nonzero torsion: cited criterion, not recomputed");
}

pub fn extension_text(out: &mut String, e: &ExtensionReport) {
    let _ = writeln!(out, "extension S = R[c/x1]: b = [{}]", list(&e.b_list));
    let _ = writeln!(out, "  S generators: {}", list(e.s_gens.gens()));
    let _ = writeln!(out, "  c_S = {}  i0 = {}", e.c_s, e.i0);
    let _ = writeln!(
        out,
        "  Herzog-Kunz sequence of S: [{}]",
        list(&e.hk_s.sequence)
    );
    let _ = writeln!(
        out,
        "  chosen generators: {}",
        list(e.chosen_generators.gens())
    );
    let _ = writeln!(
        out,
        "  V(S) = <{}>",
        list(e.value_semigroup_s.min_generators())
    );
}

pub fn hk_text(out: &mut String, hk: &HkProfile, limit: Option<usize>) {
    let _ = writeln!(out, "Herzog-Kunz sequence: [{}]", list(&hk.sequence));
    for (k, x) in hk.generators.iter().enumerate() {
        let _ = write!(out, "  x{} = {}", k + 1, series_text(x, limit));
        if let (Some(z), Some(i)) = (&hk.certificates, &hk.input_index) {
            let _ = write!(out, "    (y{} = x{} + {})", i[k] + 1, k + 1, z[k]);
        }
        out.push('\n');
    }
}

pub fn analysis_text(
    raw: &[Series],
    r: &RingReport,
    hk: &HkProfile,
    witness: Option<&TorsionWitness>,
    extension: Option<&ExtensionReport>,
) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "generators: {}", list(raw));
    let _ = writeln!(out, "multiplicity: {}", r.multiplicity);
    semigroup_text(&mut out, &r.value_semigroup);
    hk_text(&mut out, hk, Some(display_limit(r)));
    let _ = writeln!(out, "embedding dimension: {}", r.embedding_dimension);
    let _ = writeln!(
        out,
        "conductor in m^2: {} (conductor not in m^2: {})",
        yes_no(r.conductor_in_m2),
        yes_no(!r.conductor_in_m2)
    );
    let _ = writeln!(
        out,
        "reduced type: s = {}, b = [{}]",
        r.reduced_type.s,
        list(&r.reduced_type.b_list)
    );
    match witness {
        Some(w) => witness_text(&mut out, w),
        None => out.push_str("torsion witness: none\n"),
    }
    if let Some(e) = extension {
        extension_text(&mut out, e);
    }
    let _ = writeln!(out, "precision used: {}", r.precision());
    out
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
