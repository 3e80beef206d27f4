//! Rendering in the three output formats.
//!
//! Every renderer consumes the serializable document forms, so a report
//! pulled from the sweep cache and one computed fresh produce identical
//! bytes. Table output is for terminals and elides partitions longer
//! than twelve parts; json and csv always carry every part, as decimal
//! strings. Nothing rendered here depends on time, environment, or
//! iteration order of a hash map.

use std::fmt::Write as _;

use prek_core::{
    CensusRecordDoc, CollisionClassDoc, FamilyPairDoc, InjectivityReportDoc, LengthFilter,
    SCHEMA_VERSION,
};
use serde_json::json;

use crate::verify::Check;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// Table cells show at most this many parts before eliding.
const TABLE_PART_LIMIT: usize = 12;

/// `(p1, p2, ...)` with an ellipsis marker and count past the limit.
fn table_partition(parts: &[String]) -> String {
    if parts.len() <= TABLE_PART_LIMIT {
        format!("({})", parts.join(", "))
    } else {
        format!(
            "({}, ... +{} more)",
            parts[..TABLE_PART_LIMIT].join(", "),
            parts.len() - TABLE_PART_LIMIT
        )
    }
}

/// Space-joined parts: complete, and safe inside a csv cell.
fn csv_partition(parts: &[String]) -> String {
    parts.join(" ")
}

fn csv_to_string(rows: Vec<Vec<String>>) -> Result<String, Box<dyn std::error::Error>> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in rows {
        writer.write_record(&row)?;
    }
    Ok(String::from_utf8(writer.into_inner()?)?)
}

fn json_line(value: &serde_json::Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("in-memory json");
    text.push('\n');
    text
}

fn yes_no(flag: bool) -> &'static str {
    if flag {
        "yes"
    } else {
        "no"
    }
}

/// Outcome of the `map` command, already in document form.
pub struct MapOutcome {
    pub source: Vec<String>,
    pub k: usize,
    pub image: Vec<String>,
    pub image_weight: String,
    pub image_product: String,
    pub degenerate: bool,
}

pub fn render_map(
    outcome: &MapOutcome,
    format: Format,
) -> Result<String, Box<dyn std::error::Error>> {
    match format {
        Format::Table => {
            let mut out = String::new();
            writeln!(out, "source:        {}", table_partition(&outcome.source))?;
            writeln!(out, "k:             {}", outcome.k)?;
            writeln!(out, "image:         {}", table_partition(&outcome.image))?;
            writeln!(out, "image parts:   {}", outcome.image.len())?;
            writeln!(out, "image weight:  {}", outcome.image_weight)?;
            writeln!(out, "image product: {}", outcome.image_product)?;
            writeln!(out, "degenerate:    {}", yes_no(outcome.degenerate))?;
            Ok(out)
        }
        Format::Json => Ok(json_line(&json!({
            "schema_version": SCHEMA_VERSION,
            "source": outcome.source,
            "k": outcome.k,
            "image": outcome.image,
            "image_part_count": outcome.image.len(),
            "image_weight": outcome.image_weight,
            "image_product": outcome.image_product,
            "degenerate": outcome.degenerate,
        }))),
        Format::Csv => csv_to_string(vec![
            vec![
                "source".into(),
                "k".into(),
                "image".into(),
                "image_part_count".into(),
                "image_weight".into(),
                "image_product".into(),
                "degenerate".into(),
            ],
            vec![
                csv_partition(&outcome.source),
                outcome.k.to_string(),
                csv_partition(&outcome.image),
                outcome.image.len().to_string(),
                outcome.image_weight.clone(),
                outcome.image_product.clone(),
                outcome.degenerate.to_string(),
            ],
        ]),
    }
}

fn class_table_lines(out: &mut String, class: &CollisionClassDoc, index: usize) {
    let _ = writeln!(
        out,
        "  class {}: image {} — {} preimages",
        index + 1,
        table_partition(&class.image),
        class.preimage_count
    );
    for preimage in &class.preimages {
        let _ = writeln!(out, "    {}", table_partition(preimage));
    }
    if (class.preimage_count as usize) > class.preimages.len() {
        let _ = writeln!(
            out,
            "    ... {} more not listed",
            class.preimage_count as usize - class.preimages.len()
        );
    }
}

pub fn render_report(
    doc: &InjectivityReportDoc,
    format: Format,
) -> Result<String, Box<dyn std::error::Error>> {
    match format {
        Format::Table => {
            let mut out = String::new();
            writeln!(out, "n:                   {}", doc.n)?;
            writeln!(out, "k:                   {}", doc.k)?;
            writeln!(out, "length filter:       {}", doc.length_filter)?;
            writeln!(out, "partitions examined: {}", doc.partitions_examined)?;
            writeln!(out, "degenerate:          {}", doc.degenerate_count)?;
            writeln!(out, "injective:           {}", yes_no(doc.injective))?;
            writeln!(out, "collision classes:   {}", doc.classes.len())?;
            for (i, class) in doc.classes.iter().enumerate() {
                class_table_lines(&mut out, class, i);
            }
            Ok(out)
        }
        Format::Json => {
            let mut text = serde_json::to_string_pretty(doc)?;
            text.push('\n');
            Ok(text)
        }
        Format::Csv => {
            let mut rows = vec![report_csv_header()];
            rows.extend(report_csv_rows(doc));
            csv_to_string(rows)
        }
    }
}

fn report_csv_header() -> Vec<String> {
    [
        "n",
        "k",
        "length_filter",
        "partitions_examined",
        "degenerate_count",
        "injective",
        "image",
        "preimage_count",
        "preimages",
    ]
    .map(String::from)
    .to_vec()
}

/// One row per collision class; injective reports emit a single row
/// with the class columns empty.
fn report_csv_rows(doc: &InjectivityReportDoc) -> Vec<Vec<String>> {
    let prefix = [
        doc.n.to_string(),
        doc.k.to_string(),
        doc.length_filter.to_string(),
        doc.partitions_examined.to_string(),
        doc.degenerate_count.to_string(),
        doc.injective.to_string(),
    ];
    if doc.classes.is_empty() {
        let mut row = prefix.to_vec();
        row.extend([String::new(), String::new(), String::new()]);
        return vec![row];
    }
    doc.classes
        .iter()
        .map(|class| {
            let mut row = prefix.to_vec();
            row.push(csv_partition(&class.image));
            row.push(class.preimage_count.to_string());
            row.push(
                class
                    .preimages
                    .iter()
                    .map(|p| csv_partition(p))
                    .collect::<Vec<_>>()
                    .join("|"),
            );
            row
        })
        .collect()
}

pub fn render_sweep(
    from: u64,
    to: u64,
    k: usize,
    length_filter: LengthFilter,
    docs: &[InjectivityReportDoc],
    format: Format,
) -> Result<String, Box<dyn std::error::Error>> {
    match format {
        Format::Table => {
            let mut out = String::new();
            writeln!(
                out,
                "sweep: n in [{from}, {to}], k={k}, length filter {length_filter}"
            )?;
            writeln!(
                out,
                "{:>6}  {:>9}  {:>10}  {:>7}  injective",
                "n", "examined", "degenerate", "classes"
            )?;
            for doc in docs {
                writeln!(
                    out,
                    "{:>6}  {:>9}  {:>10}  {:>7}  {}",
                    doc.n,
                    doc.partitions_examined,
                    doc.degenerate_count,
                    doc.classes.len(),
                    yes_no(doc.injective)
                )?;
            }
            let injective: Vec<String> = docs
                .iter()
                .filter(|d| d.injective)
                .map(|d| d.n.to_string())
                .collect();
            writeln!(
                out,
                "injective n: {}",
                if injective.is_empty() {
                    "none".to_string()
                } else {
                    injective.join(", ")
                }
            )?;
            Ok(out)
        }
        Format::Json => Ok(json_line(&json!({
            "schema_version": SCHEMA_VERSION,
            "from": from,
            "to": to,
            "k": k,
            "length_filter": length_filter,
            "reports": docs,
        }))),
        Format::Csv => {
            let mut rows = vec![report_csv_header()];
            for doc in docs {
                rows.extend(report_csv_rows(doc));
            }
            csv_to_string(rows)
        }
    }
}

fn census_csv_header() -> Vec<String> {
    ["n", "exact", "lower_bound", "gap"]
        .map(String::from)
        .to_vec()
}

fn census_csv_row(doc: &CensusRecordDoc) -> Vec<String> {
    vec![
        doc.n.to_string(),
        doc.exact_count.to_string(),
        doc.lower_bound.to_string(),
        (doc.exact_count as i64 - doc.lower_bound as i64).to_string(),
    ]
}

pub fn render_census_record(
    doc: &CensusRecordDoc,
    format: Format,
) -> Result<String, Box<dyn std::error::Error>> {
    match format {
        Format::Table => {
            let mut out = String::new();
            writeln!(out, "n:           {}", doc.n)?;
            writeln!(out, "exact count: {}", doc.exact_count)?;
            writeln!(out, "lower bound: {}", doc.lower_bound)?;
            writeln!(
                out,
                "gap:         {}",
                doc.exact_count as i64 - doc.lower_bound as i64
            )?;
            writeln!(out, "images:")?;
            for image in &doc.images {
                writeln!(out, "  {}", table_partition(image))?;
            }
            writeln!(out, "divisor witnesses:")?;
            for witness in &doc.divisor_witnesses {
                writeln!(
                    out,
                    "  {} -> {}",
                    table_partition(&witness.preimage),
                    table_partition(&witness.image)
                )?;
            }
            Ok(out)
        }
        Format::Json => {
            let mut text = serde_json::to_string_pretty(doc)?;
            text.push('\n');
            Ok(text)
        }
        Format::Csv => csv_to_string(vec![census_csv_header(), census_csv_row(doc)]),
    }
}

pub fn render_census_sweep(
    records: &[CensusRecordDoc],
    units: &[u64],
    bound_violations: &[u64],
    format: Format,
) -> Result<String, Box<dyn std::error::Error>> {
    match format {
        Format::Table => {
            let mut out = String::new();
            writeln!(
                out,
                "{:>6}  {:>6}  {:>11}  {:>4}",
                "n", "exact", "lower_bound", "gap"
            )?;
            for doc in records {
                writeln!(
                    out,
                    "{:>6}  {:>6}  {:>11}  {:>4}",
                    doc.n,
                    doc.exact_count,
                    doc.lower_bound,
                    doc.exact_count as i64 - doc.lower_bound as i64
                )?;
            }
            let unit_list = if units.is_empty() {
                "none".to_string()
            } else {
                units
                    .iter()
                    .map(u64::to_string)
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            writeln!(out, "one-element image sets at n: {unit_list}")?;
            let violation_list = if bound_violations.is_empty() {
                "none".to_string()
            } else {
                bound_violations
                    .iter()
                    .map(u64::to_string)
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            writeln!(out, "lower-bound violations: {violation_list}")?;
            Ok(out)
        }
        Format::Json => Ok(json_line(&json!({
            "schema_version": SCHEMA_VERSION,
            "records": records,
            "units": units,
            "bound_violations": bound_violations,
        }))),
        Format::Csv => {
            let mut rows = vec![census_csv_header()];
            rows.extend(records.iter().map(census_csv_row));
            csv_to_string(rows)
        }
    }
}

pub fn render_family(
    doc: &FamilyPairDoc,
    format: Format,
) -> Result<String, Box<dyn std::error::Error>> {
    match format {
        Format::Table => {
            let mut out = String::new();
            let parameters = doc
                .parameters
                .iter()
                .map(|(name, value)| format!("{name}={value}"))
                .collect::<Vec<_>>()
                .join(", ");
            writeln!(out, "family:       {}", doc.family)?;
            writeln!(out, "parameters:   {parameters}")?;
            writeln!(out, "first:        {}", table_partition(&doc.first))?;
            writeln!(out, "second:       {}", table_partition(&doc.second))?;
            writeln!(out, "weight:       {}", doc.weight)?;
            writeln!(out, "k:            {}", doc.k)?;
            writeln!(out, "shared image: {}", table_partition(&doc.shared_image))?;
            writeln!(out, "validated:    yes")?;
            Ok(out)
        }
        Format::Json => {
            let mut text = serde_json::to_string_pretty(doc)?;
            text.push('\n');
            Ok(text)
        }
        Format::Csv => {
            let mut header = vec!["family".to_string()];
            header.extend(doc.parameters.keys().cloned());
            header.extend(["first", "second", "weight", "k", "shared_image"].map(String::from));
            let mut row = vec![doc.family.clone()];
            row.extend(doc.parameters.values().map(u64::to_string));
            row.extend([
                csv_partition(&doc.first),
                csv_partition(&doc.second),
                doc.weight.clone(),
                doc.k.to_string(),
                csv_partition(&doc.shared_image),
            ]);
            csv_to_string(vec![header, row])
        }
    }
}

pub fn render_verify(
    suite: &str,
    checks: &[Check],
    format: Format,
) -> Result<String, Box<dyn std::error::Error>> {
    let passed = checks.iter().all(|c| c.passed);
    match format {
        Format::Table => {
            let mut out = String::new();
            writeln!(out, "suite: {suite}")?;
            for check in checks {
                writeln!(
                    out,
                    "[{}] {} — {}",
                    if check.passed { "PASS" } else { "FAIL" },
                    check.name,
                    check.detail
                )?;
            }
            writeln!(
                out,
                "result: {} ({} checks)",
                if passed { "PASS" } else { "FAIL" },
                checks.len()
            )?;
            Ok(out)
        }
        Format::Json => Ok(json_line(&json!({
            "schema_version": SCHEMA_VERSION,
            "suite": suite,
            "passed": passed,
            "checks": checks
                .iter()
                .map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail}))
                .collect::<Vec<_>>(),
        }))),
        Format::Csv => {
            let mut rows = vec![["suite", "check", "passed", "detail"]
                .map(String::from)
                .to_vec()];
            for check in checks {
                rows.push(vec![
                    suite.to_string(),
                    check.name.clone(),
                    check.passed.to_string(),
                    check.detail.clone(),
                ]);
            }
            csv_to_string(rows)
        }
    }
}
