use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::Path;

use hamlab::codec::{parse_line, GraphText};
use hamlab::correspondence::expand;
use hamlab::graph::BipartiteGraphWithMatching;
use hamlab::Error;

use crate::Failure;

/// Non-empty lines of a file or stdin.
pub fn lines(path: Option<&Path>) -> Result<Vec<String>, Failure> {
    let reader: Box<dyn BufRead> = match path {
        Some(p) => Box::new(BufReader::new(
            File::open(p).map_err(|e| Failure::usage(format!("cannot open {}: {e}", p.display())))?,
        )),
        None => Box::new(BufReader::new(io::stdin())),
    };
    let mut out = Vec::new();
    for line in reader.lines() {
        let line = line?;
        let t = line.trim();
        if !t.is_empty() {
            out.push(t.to_string());
        }
    }
    Ok(out)
}

pub fn graphs(path: Option<&Path>) -> Result<Vec<GraphText>, Failure> {
    lines(path)?
        .iter()
        .enumerate()
        .map(|(i, l)| parse_line(l).map_err(|e| at_line(i, e)))
        .collect()
}

pub fn at_line(i: usize, e: Error) -> Failure {
    let mut f = Failure::from(e);
    f.message = format!("line {}: {}", i + 1, f.message);
    f
}

pub fn as_bipartite(i: usize, g: &GraphText) -> Result<BipartiteGraphWithMatching, Failure> {
    match g {
        GraphText::Directed(d) => Ok(expand(d)),
        GraphText::Undirected(_) => Err(Failure::usage(format!(
            "line {}: bipartite input must be the digraph6 of the contraction",
            i + 1
        ))),
    }
}

pub struct Output(Box<dyn Write>);

impl Output {
    pub fn stdout() -> Self {
        Output(Box::new(io::BufWriter::new(io::stdout())))
    }

    pub fn file(path: &Path) -> Result<Self, Failure> {
        let f = File::create(path).map_err(|e| Failure::usage(format!("cannot create {}: {e}", path.display())))?;
        Ok(Output(Box::new(io::BufWriter::new(f))))
    }

    pub fn line(&mut self, s: impl AsRef<str>) -> Result<(), Failure> {
        writeln!(self.0, "{}", s.as_ref())?;
        Ok(())
    }

    pub fn finish(mut self) -> Result<(), Failure> {
        self.0.flush()?;
        Ok(())
    }
}
