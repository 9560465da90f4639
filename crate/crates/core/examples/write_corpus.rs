//! Regenerates the golden corpus: `cargo run --example write_corpus -- <dir>`.
//! Each square also gets its classification report under `<dir>/reports`.

use std::fs;
use std::path::PathBuf;

use rackcover::classify::{classify, classify_square};
use rackcover::corpus::golden_documents;
use rackcover::doc::{emit, Document, ReportDoc};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "corpus".into()));
    fs::create_dir_all(dir.join("reports"))?;
    for (name, doc) in golden_documents() {
        fs::write(dir.join(format!("{name}.json")), emit(&doc))?;
        let report = match &doc {
            Document::Square(s) => Some(classify_square(&s.to_square()?)?),
            Document::Morphism(m) => Some(classify(&m.to_morphism()?)?),
            _ => None,
        };
        if let Some(r) = report {
            let r = Document::Report(ReportDoc::from(&r));
            fs::write(dir.join("reports").join(format!("{name}.json")), emit(&r))?;
        }
    }
    Ok(())
}
