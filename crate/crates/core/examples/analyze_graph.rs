//! Full classification report for a graph file.
//!
//! cargo run --example analyze_graph -- data/d4.graph [--json]

use std::env;
use std::fs;
use std::process;

use lipman::report::{emit_report, Format};
use lipman::{nash_verdict, parse_graph};

fn main() {
    let args: Vec<String> = env::args().skip(1).collect();
    let path = args.iter().find(|a| !a.starts_with("--")).map_or("data/a3.graph", String::as_str);
    let format = if args.iter().any(|a| a == "--json") { Format::Json } else { Format::Text };

    let text = fs::read_to_string(path).unwrap_or_else(|e| {
        eprintln!("cannot read {path}: {e}");
        process::exit(1);
    });
    let report = parse_graph(&text).and_then(|g| nash_verdict(&g)).unwrap_or_else(|e| {
        eprintln!("error: {e}");
        process::exit(1);
    });
    println!("{}", emit_report(&report, format));
}
