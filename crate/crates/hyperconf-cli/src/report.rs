//! Verdict and certificate rendering: human-readable text and the JSON
//! record `{verdict, path, certificate: {kind, clique, vertex}, timings}`.

use serde::Serialize;

use hyperconf::dual_conformality::{Certificate, Verdict};
use hyperconf::{Hypergraph, VertexSet};

/// `{1 2 3}` with 1-based ids.
pub fn fmt_set(s: &VertexSet) -> String {
    let ids: Vec<String> = s.iter().map(|v| (v.0 + 1).to_string()).collect();
    format!("{{{}}}", ids.join(" "))
}

#[derive(Serialize)]
struct JsonCertificate {
    kind: &'static str,
    clique: Vec<u32>,
    vertex: Option<u32>,
}

#[derive(Serialize)]
struct JsonTimings {
    total_ms: f64,
}

#[derive(Serialize)]
struct JsonReport {
    verdict: &'static str,
    path: String,
    certificate: Option<JsonCertificate>,
    timings: JsonTimings,
}

fn certificate_json(c: &Certificate) -> JsonCertificate {
    match c {
        Certificate::NonTransversalClique { clique } => JsonCertificate {
            kind: "non_transversal_clique",
            clique: clique.iter().map(|v| v.0 + 1).collect(),
            vertex: None,
        },
        Certificate::NonMinimalWitness { clique, vertex } => JsonCertificate {
            kind: "non_minimal_witness",
            clique: clique.iter().map(|v| v.0 + 1).collect(),
            vertex: Some(vertex.0 + 1),
        },
    }
}

pub fn verdict_json(verdict: &Verdict, total_ms: f64) -> String {
    let report = JsonReport {
        verdict: if verdict.dually_conformal {
            "YES"
        } else {
            "NO"
        },
        path: verdict.path.to_string(),
        certificate: verdict.certificate.as_ref().map(certificate_json),
        timings: JsonTimings { total_ms },
    };
    serde_json::to_string(&report).expect("report serializes")
}

/// Text rendering; `reduced` is the hypergraph the certificate refers to
/// (the input with non-minimal edges dropped).
pub fn verdict_text(verdict: &Verdict, reduced: &Hypergraph, dropped_edges: usize) -> String {
    let mut out = String::new();
    if verdict.dually_conformal {
        out.push_str(&format!("YES (dually conformal) via {}\n", verdict.path));
    } else {
        out.push_str(&format!("NO (not dually conformal) via {}\n", verdict.path));
        match verdict
            .certificate
            .as_ref()
            .expect("negative verdicts carry a certificate")
        {
            Certificate::NonTransversalClique { clique } => {
                let missed = reduced
                    .edges()
                    .iter()
                    .find(|e| e.intersection(clique).is_empty())
                    .expect("certificate clique misses an edge");
                out.push_str(&format!(
                    "certificate: maximal clique {} misses hyperedge {}\n",
                    fmt_set(clique),
                    fmt_set(missed)
                ));
            }
            Certificate::NonMinimalWitness { clique, vertex } => {
                out.push_str(&format!(
                    "certificate: clique {} and vertex {}: every hyperedge containing it meets the clique at least twice\n",
                    fmt_set(clique),
                    vertex.0 + 1
                ));
            }
        }
    }
    if dropped_edges > 0 {
        out.push_str(&format!(
            "note: ignored {dropped_edges} non-minimal hyperedge(s)\n"
        ));
    }
    out
}
