use std::fmt::Write as _;
use std::str::FromStr;

use super::verify::Report;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Tsv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tsv" => Ok(Format::Tsv),
            "json" => Ok(Format::Json),
            other => Err(Error::Parse(format!("unknown format {other:?}"))),
        }
    }
}

/// Renders a report. Output depends only on the report contents.
pub fn emit_report(report: &Report, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("report serializes") + "\n",
        Format::Tsv => tsv(report),
    }
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

fn section(out: &mut String, name: &str, columns: &[&str], rows: Vec<Vec<String>>) {
    if rows.is_empty() {
        return;
    }
    let _ = writeln!(out, "[{name}]");
    let _ = writeln!(out, "{}", columns.join("\t"));
    for row in rows {
        let _ = writeln!(out, "{}", row.join("\t"));
    }
}

fn tsv(r: &Report) -> String {
    let h = &r.header;
    let mut out = String::new();
    let _ = writeln!(out, "# {} {}", h.tool, h.version);
    let _ = writeln!(out, "# h_constant\t{}", h.h_constant);
    let _ = writeln!(out, "# log_base\t{}", h.log_base);
    let _ = writeln!(out, "# max_order\t{}", h.max_order);
    let _ = writeln!(out, "# max_aut_order\t{}", h.max_aut_order);
    let _ = writeln!(out, "# element_cap\t{}", h.element_cap);
    let _ = writeln!(out, "# corpus_sha256\t{}", h.corpus_sha256);
    let _ = writeln!(out, "# checks\t{}", h.checks.join(","));
    for w in &h.warnings {
        let _ = writeln!(out, "# warning\t{w}");
    }
    if let Some(m) = r.aut_class_count {
        let _ = writeln!(out, "# aut_class_count\t{m}");
    }
    if h.checks.iter().any(|c| c == "proposition") {
        let _ = writeln!(
            out,
            "# genuine_nonabelian_instances\t{}",
            r.genuine_nonabelian()
        );
    }
    section(
        &mut out,
        "jordan",
        &[
            "group",
            "subgroup_id",
            "subgroup_order",
            "index",
            "covered",
            "pass",
        ],
        r.jordan
            .iter()
            .map(|x| {
                vec![
                    x.group.clone(),
                    x.subgroup_id.to_string(),
                    x.subgroup_order.to_string(),
                    x.index.to_string(),
                    x.covered.to_string(),
                    x.pass.to_string(),
                ]
            })
            .collect(),
    );
    section(
        &mut out,
        "theorem",
        &[
            "group",
            "subgroup_id",
            "subgroup_order",
            "aut_id",
            "n",
            "c",
            "index",
            "covered",
            "bound_kind",
            "bound",
            "diagnostics_ok",
            "pass",
        ],
        r.theorem
            .iter()
            .map(|x| {
                vec![
                    x.group.clone(),
                    x.subgroup_id.to_string(),
                    x.subgroup_order.to_string(),
                    x.aut_id.to_string(),
                    x.n.to_string(),
                    opt(&x.c),
                    x.index.to_string(),
                    x.covered.to_string(),
                    opt(&x.bound_kind),
                    opt(&x.bound),
                    opt(&x.diagnostics.as_ref().map(|d| d.ok)),
                    x.pass.to_string(),
                ]
            })
            .collect(),
    );
    section(
        &mut out,
        "proposition",
        &[
            "group",
            "subgroup_id",
            "aut_id",
            "l_id",
            "l_order",
            "n",
            "index",
            "branch",
            "pass_f",
            "pass_n",
            "krsm",
            "pass",
        ],
        r.proposition
            .iter()
            .map(|x| {
                vec![
                    x.group.clone(),
                    x.subgroup_id.to_string(),
                    x.aut_id.to_string(),
                    x.l_id.to_string(),
                    x.l_order.to_string(),
                    x.n.to_string(),
                    x.index.to_string(),
                    x.branch.clone(),
                    x.pass_f.to_string(),
                    opt(&x.pass_n),
                    opt(&x
                        .block
                        .as_ref()
                        .map(|b| format!("{},{},{},{}", b.k, b.r, b.s, b.m))),
                    x.pass.to_string(),
                ]
            })
            .collect(),
    );
    section(
        &mut out,
        "nonabelian",
        &[
            "group",
            "subgroup_id",
            "aut_id",
            "l_order",
            "covered",
            "krsm",
            "note",
        ],
        r.nonabelian
            .iter()
            .map(|x| {
                vec![
                    x.group.clone(),
                    x.subgroup_id.to_string(),
                    x.aut_id.to_string(),
                    x.l_order.to_string(),
                    x.covered.to_string(),
                    opt(&x
                        .block
                        .as_ref()
                        .map(|b| format!("{},{},{},{}", b.k, b.r, b.s, b.m))),
                    opt(&x.note),
                ]
            })
            .collect(),
    );
    section(
        &mut out,
        "lemma",
        &[
            "k",
            "partition",
            "tuple",
            "projections_full",
            "recovered",
            "pass",
        ],
        r.lemma
            .iter()
            .map(|x| {
                vec![
                    x.k.to_string(),
                    x.partition.clone(),
                    x.tuple.clone(),
                    x.projections_full.to_string(),
                    x.recovered.to_string(),
                    x.pass.to_string(),
                ]
            })
            .collect(),
    );
    section(
        &mut out,
        "saxl",
        &[
            "group",
            "subgroup_id",
            "subgroup_order",
            "cocore_order",
            "pass",
        ],
        r.saxl
            .iter()
            .map(|x| {
                vec![
                    x.group.clone(),
                    x.subgroup_id.to_string(),
                    x.subgroup_order.to_string(),
                    x.cocore_order.to_string(),
                    x.pass.to_string(),
                ]
            })
            .collect(),
    );
    section(
        &mut out,
        "exploratory",
        &["n", "max_index", "instances"],
        r.exploratory
            .iter()
            .map(|x| {
                vec![
                    x.n.to_string(),
                    x.max_index.to_string(),
                    x.instances.to_string(),
                ]
            })
            .collect(),
    );
    section(
        &mut out,
        "notices",
        &["group", "check", "message"],
        r.notices
            .iter()
            .map(|x| vec![x.group.clone(), x.check.clone(), x.message.clone()])
            .collect(),
    );
    section(
        &mut out,
        "events",
        &["check", "group", "detail"],
        r.events
            .iter()
            .map(|x| vec![x.check.clone(), x.group.name.clone(), x.detail.clone()])
            .collect(),
    );
    out
}
