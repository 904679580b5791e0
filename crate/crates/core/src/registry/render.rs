use std::fmt::Write;

use super::witness::{Fact, Witness};
use super::{CheckKind, CheckReport, HuntResult, SkipReason, Status, SuiteReport};

fn status_word(r: &CheckReport) -> String {
    match (r.status, r.kind) {
        (Status::Verified, CheckKind::Theorem) => "VERIFIED".into(),
        (Status::Verified, CheckKind::Counterexample) => "CONFIRMED".into(),
        (Status::Refuted, _) => "REFUTED".into(),
        (Status::Skipped, _) => format!(
            "SKIPPED ({})",
            match r.skip_reason {
                Some(SkipReason::Hypothesis) => "hypothesis",
                Some(SkipReason::Cap) => "cap",
                Some(SkipReason::NoWitness) => "no witness",
                None => "unspecified",
            }
        ),
    }
}

fn ideal_ref(w: &Witness, k: usize) -> String {
    match w.ideals.get(k) {
        Some(i) => format!("I{k}{}", i.label),
        None => format!("I{k}"),
    }
}

fn within_ref(w: &Witness, k: Option<usize>) -> String {
    k.map_or_else(|| "R".to_string(), |k| ideal_ref(w, k))
}

/// Human-readable form of one fact.
pub fn fact_text(w: &Witness, fact: &Fact) -> String {
    let i = |k: &usize| ideal_ref(w, *k);
    match fact {
        Fact::NilEssential {
            ideal,
            within,
            holds,
        } => {
            format!(
                "nil-essential {} in {} = {holds}",
                i(ideal),
                within_ref(w, *within)
            )
        }
        Fact::Essential {
            ideal,
            within,
            holds,
        } => {
            format!(
                "essential {} in {} = {holds}",
                i(ideal),
                within_ref(w, *within)
            )
        }
        Fact::Nilpotent { ideal, holds } => format!("nilpotent {} = {holds}", i(ideal)),
        Fact::Intersection {
            left,
            right,
            result,
        } => {
            format!("{} ∩ {} = {}", i(left), i(right), i(result))
        }
        Fact::Sum {
            left,
            right,
            result,
        } => format!("{} + {} = {}", i(left), i(right), i(result)),
        Fact::Product {
            left,
            right,
            result,
        } => {
            format!("{} · {} = {}", i(left), i(right), i(result))
        }
        Fact::Power {
            ideal,
            exponent,
            result,
        } => {
            format!("{}^{exponent} = {}", i(ideal), i(result))
        }
        Fact::Contains {
            outer,
            inner,
            holds,
        } => {
            format!("{} ⊆ {} = {holds}", i(inner), i(outer))
        }
        Fact::Maximal { ideal, holds } => format!("maximal {} = {holds}", i(ideal)),
        Fact::Prime { ideal, holds } => format!("prime {} = {holds}", i(ideal)),
        Fact::Semisimple { holds } => format!("semisimple R = {holds}"),
        Fact::JacobsonRadical { result } => format!("J(R) = {}", i(result)),
        Fact::Radical { ideal, result } => format!("rad {} = {}", i(ideal), i(result)),
        Fact::Quotient {
            ideal,
            element,
            result,
        } => {
            format!("({} : {element}) = {}", i(ideal), i(result))
        }
        Fact::ElementCriterion {
            ideal,
            within,
            holds,
        } => {
            format!(
                "element criterion {} in {} = {holds}",
                i(ideal),
                within_ref(w, *within)
            )
        }
        Fact::LocalizedNilEssential { ideal, holds } => {
            format!("nil-essential S⁻¹{} in S⁻¹R = {holds}", i(ideal))
        }
        Fact::Preimage { ideal, result } => format!("f⁻¹({}) = {}", i(ideal), i(result)),
        Fact::Kernel { hom, result } => format!("ker f{hom} = {}", i(result)),
        Fact::Image { hom, result } => format!("im f{hom} = {}", i(result)),
        Fact::NilEssentialMono { hom, holds } => {
            format!("nil-essential monomorphism f{hom} = {holds}")
        }
        Fact::IdealCount { count } => format!("number of ideals = {count}"),
    }
}

pub fn render_witness_text(w: &Witness, indent: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{indent}witness over {} ideals:", w.sidedness);
    for (k, ideal) in w.ideals.iter().enumerate() {
        let _ = writeln!(
            out,
            "{indent}  I{k}{} [{}] = {{{}}}",
            ideal.label,
            ideal.sidedness,
            ideal.members.join(", ")
        );
    }
    if let Some(s) = &w.multiplicative_set {
        let _ = writeln!(out, "{indent}  S = {{{}}}", s.join(", "));
    }
    if let Some(f) = &w.endomorphism {
        let pairs: Vec<String> = f.iter().map(|(x, y)| format!("{x}↦{y}")).collect();
        let _ = writeln!(out, "{indent}  f = {}", pairs.join(" "));
    }
    for (k, h) in w.homs.iter().enumerate() {
        let pairs: Vec<String> = h.pairs.iter().map(|(x, y)| format!("{x}↦{y}")).collect();
        let _ = writeln!(
            out,
            "{indent}  f{k}: I{} → I{} : {}",
            h.source,
            h.target,
            pairs.join(" ")
        );
    }
    for fact in &w.facts {
        let _ = writeln!(out, "{indent}  {}", fact_text(w, fact));
    }
    out
}

pub fn render_report_text(r: &CheckReport) -> String {
    let mut out = format!(
        "{:<6} {:<28} {:<9} {}  instances={}",
        r.check_id.as_str(),
        r.ring,
        r.sidedness
            .map(|s| s.to_string())
            .unwrap_or_else(|| "-".into()),
        status_word(r),
        r.instances
    );
    if let Some(ms) = r.elapsed_ms {
        let _ = write!(out, "  {ms:.1}ms");
    }
    out.push('\n');
    if let Some(d) = &r.detail {
        let _ = writeln!(out, "    {d}");
    }
    for n in &r.notes {
        let _ = writeln!(out, "    note: {n}");
    }
    if let Some(w) = &r.witness {
        out.push_str(&render_witness_text(w, "    "));
    }
    out
}

pub fn render_suite_text(suite: &SuiteReport) -> String {
    let mut out: String = suite.reports.iter().map(render_report_text).collect();
    let s = &suite.summary;
    let _ = writeln!(
        out,
        "summary: {} rings, {} verified, {} refuted, {} skipped",
        s.rings, s.verified, s.refuted, s.skipped
    );
    if !s.confirmed.is_empty() {
        let parts: Vec<String> = s
            .confirmed
            .iter()
            .map(|(c, n)| format!("{c}={n}"))
            .collect();
        let _ = writeln!(out, "confirmed counterexamples: {}", parts.join(" "));
    }
    out
}

pub fn render_hunt_text(h: &HuntResult) -> String {
    let mut out = String::new();
    match &h.witness {
        Some(w) => {
            let _ = writeln!(
                out,
                "hunt {}: witness in {} after {} instances",
                h.claim, w.ring, h.consumed
            );
            let _ = writeln!(out, "    {}", w.detail);
            out.push_str(&render_witness_text(&w.witness, "    "));
        }
        None => {
            let _ = writeln!(
                out,
                "hunt {}: {} after {} of {} instances over {} rings",
                h.claim,
                if h.budget_spent {
                    "budget spent"
                } else {
                    "exhausted"
                },
                h.consumed,
                h.budget,
                h.searched.len()
            );
        }
    }
    out
}
