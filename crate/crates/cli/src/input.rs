//! Input documents: graph and Artin-system JSON, serialized WLOGs and
//! presentations, and a small DOT subset for plain undirected graphs.

use serde::{Deserialize, Serialize};
use wlogkit_core::artin::ArtinTitsSystem;
use wlogkit_core::graph::SimplicialGraph;
use wlogkit_core::wlog::{Presentation, WlogEdge, WlogGraph, WlogVertex};
use wlogkit_core::word::{Alphabet, Symbol, Word};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InputKind {
    Graph,
    Artin,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputEdge {
    pub u: String,
    pub v: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
}

/// A graph or Artin–Tits system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub kind: InputKind,
    pub vertices: Vec<String>,
    pub edges: Vec<InputEdge>,
}

impl InputDocument {
    pub fn graph(&self) -> Result<SimplicialGraph, CliError> {
        if self.kind != InputKind::Graph {
            return Err(CliError::Input("expected a document of kind \"graph\"".into()));
        }
        if let Some(e) = self.edges.iter().find(|e| e.m.is_some()) {
            return Err(CliError::Input(format!("edge {}-{} carries m in a graph document", e.u, e.v)));
        }
        let edges: Vec<(&str, &str)> = self.edges.iter().map(|e| (e.u.as_str(), e.v.as_str())).collect();
        let vs: Vec<&str> = self.vertices.iter().map(String::as_str).collect();
        Ok(SimplicialGraph::new(&vs, &edges)?)
    }

    pub fn artin(&self) -> Result<ArtinTitsSystem, CliError> {
        if self.kind != InputKind::Artin {
            return Err(CliError::Input("expected a document of kind \"artin\"".into()));
        }
        let edges = self
            .edges
            .iter()
            .map(|e| match e.m {
                Some(m) => Ok((e.u.as_str(), e.v.as_str(), m)),
                None => Err(CliError::Input(format!("edge {}-{} has no label m", e.u, e.v))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        let vs: Vec<&str> = self.vertices.iter().map(String::as_str).collect();
        Ok(ArtinTitsSystem::new(&vs, &edges)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WlogVertexDoc {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub word: Option<Word>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WlogEdgeDoc {
    pub o: String,
    pub t: String,
    pub label: Word,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WlogDocument {
    pub vertices: Vec<WlogVertexDoc>,
    pub edges: Vec<WlogEdgeDoc>,
}

impl WlogDocument {
    pub fn to_wlog(&self) -> Result<WlogGraph, CliError> {
        let vertices =
            self.vertices.iter().map(|v| WlogVertex { name: Symbol::new(&v.name), word: v.word.clone() }).collect();
        let pos = |n: &str| {
            self.vertices
                .iter()
                .position(|v| v.name == n)
                .ok_or_else(|| CliError::Input(format!("edge endpoint {n} is not a vertex")))
        };
        let edges = self
            .edges
            .iter()
            .map(|e| Ok(WlogEdge { origin: pos(&e.o)?, terminus: pos(&e.t)?, label: e.label.clone() }))
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok(WlogGraph::new(vertices, edges)?)
    }

    pub fn from_wlog(w: &WlogGraph) -> Self {
        WlogDocument {
            vertices: w
                .vertices()
                .iter()
                .map(|v| WlogVertexDoc { name: v.name.to_string(), word: v.word.clone() })
                .collect(),
            edges: w
                .edges()
                .iter()
                .map(|e| WlogEdgeDoc {
                    o: w.name(e.origin).to_string(),
                    t: w.name(e.terminus).to_string(),
                    label: e.label.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationDocument {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

impl PresentationDocument {
    pub fn to_presentation(&self) -> Result<Presentation, CliError> {
        let gens = Alphabet::new(self.generators.iter().map(String::as_str))?;
        Ok(Presentation::new(gens, self.relators.clone(), None)?)
    }

    pub fn from_presentation(p: &Presentation) -> Self {
        PresentationDocument {
            generators: p.generators().symbols().iter().map(Symbol::to_string).collect(),
            relators: p.relators().to_vec(),
        }
    }
}

/// Any document the CLI reads.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum AnyDocument {
    Wlog(WlogDocument),
    Presentation(PresentationDocument),
    #[serde(untagged)]
    Input(InputDocument),
}

/// Parses JSON, or the DOT subset when the text starts with `graph`.
pub fn parse_document(text: &str) -> Result<AnyDocument, CliError> {
    let body = strip_comments(text);
    let head = body.trim_start();
    if head.starts_with("graph") || head.starts_with("strict") || head.starts_with("digraph") {
        return parse_dot(text).map(AnyDocument::Input);
    }
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("invalid JSON: {e}")))?;
    match value.get("kind").and_then(|k| k.as_str()) {
        Some("graph") | Some("artin") => serde_json::from_value::<InputDocument>(value).map(AnyDocument::Input),
        Some("wlog") => {
            let mut v = value;
            v.as_object_mut().expect("object").remove("kind");
            serde_json::from_value::<WlogDocument>(v).map(AnyDocument::Wlog)
        }
        Some("presentation") => {
            let mut v = value;
            v.as_object_mut().expect("object").remove("kind");
            serde_json::from_value::<PresentationDocument>(v).map(AnyDocument::Presentation)
        }
        Some(other) => return Err(CliError::Input(format!("unknown document kind {other:?}"))),
        None => return Err(CliError::Input("document has no \"kind\" field".into())),
    }
    .map_err(|e| CliError::Input(format!("malformed document: {e}")))
}

fn strip_comments(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    let mut chars = text.chars().peekable();
    let mut in_string = false;
    while let Some(c) = chars.next() {
        if in_string {
            out.push(c);
            if c == '\\' {
                if let Some(n) = chars.next() {
                    out.push(n);
                }
            } else if c == '"' {
                in_string = false;
            }
            continue;
        }
        match c {
            '"' => {
                in_string = true;
                out.push(c);
            }
            '/' if chars.peek() == Some(&'/') => {
                for n in chars.by_ref() {
                    if n == '\n' {
                        out.push('\n');
                        break;
                    }
                }
            }
            '/' if chars.peek() == Some(&'*') => {
                chars.next();
                let mut prev = ' ';
                for n in chars.by_ref() {
                    if prev == '*' && n == '/' {
                        break;
                    }
                    prev = n;
                }
                out.push(' ');
            }
            '#' if out.is_empty() || out.ends_with('\n') => {
                for n in chars.by_ref() {
                    if n == '\n' {
                        out.push('\n');
                        break;
                    }
                }
            }
            _ => out.push(c),
        }
    }
    out
}

#[derive(Debug, PartialEq)]
enum Token {
    Id(String),
    LBrace,
    RBrace,
    Semi,
    EdgeOp,
    Other(char),
}

fn tokenize(text: &str) -> Result<Vec<Token>, CliError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '{' => {
                chars.next();
                out.push(Token::LBrace);
            }
            '}' => {
                chars.next();
                out.push(Token::RBrace);
            }
            ';' | ',' => {
                chars.next();
                out.push(Token::Semi);
            }
            '-' => {
                chars.next();
                match chars.next() {
                    Some('-') => out.push(Token::EdgeOp),
                    Some('>') => return Err(CliError::Input("directed edges (->) are not supported".into())),
                    _ => return Err(CliError::Input("stray '-' in DOT input".into())),
                }
            }
            '"' => {
                chars.next();
                let mut s = String::new();
                loop {
                    match chars.next() {
                        Some('"') => break,
                        Some('\\') => s.extend(chars.next()),
                        Some(ch) => s.push(ch),
                        None => return Err(CliError::Input("unterminated string in DOT input".into())),
                    }
                }
                out.push(Token::Id(s));
            }
            c if c.is_alphanumeric() || c == '_' => {
                let mut s = String::new();
                while let Some(&ch) = chars.peek() {
                    if ch.is_alphanumeric() || ch == '_' {
                        s.push(ch);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Id(s));
            }
            other => {
                chars.next();
                out.push(Token::Other(other));
            }
        }
    }
    Ok(out)
}

/// `[strict] graph [name] { a; a -- b -- c; ... }`. Attributes, subgraphs
/// and directed graphs are rejected. Vertices are listed in order of first
/// appearance; a repeated edge is an error unless the graph is `strict`.
pub fn parse_dot(text: &str) -> Result<InputDocument, CliError> {
    let tokens = tokenize(&strip_comments(text))?;
    let mut it = tokens.into_iter().peekable();
    let mut strict = false;
    if it.peek() == Some(&Token::Id("strict".into())) {
        strict = true;
        it.next();
    }
    match it.next() {
        Some(Token::Id(k)) if k == "graph" => {}
        Some(Token::Id(k)) if k == "digraph" => {
            return Err(CliError::Input("directed graphs are not supported".into()));
        }
        _ => return Err(CliError::Input("DOT input must start with 'graph'".into())),
    }
    if let Some(Token::Id(_)) = it.peek() {
        it.next();
    }
    if it.next() != Some(Token::LBrace) {
        return Err(CliError::Input("expected '{' after graph header".into()));
    }
    let mut vertices: Vec<String> = Vec::new();
    let mut edges: Vec<InputEdge> = Vec::new();
    let add_vertex = |v: &str, vertices: &mut Vec<String>| {
        if !vertices.iter().any(|x| x == v) {
            vertices.push(v.to_string());
        }
    };
    loop {
        match it.next() {
            Some(Token::RBrace) => break,
            Some(Token::Semi) => continue,
            Some(Token::Id(first)) => {
                if matches!(first.as_str(), "node" | "edge" | "graph" | "subgraph") {
                    return Err(CliError::Input(format!("DOT keyword '{first}' is not supported")));
                }
                add_vertex(&first, &mut vertices);
                let mut prev = first;
                while it.peek() == Some(&Token::EdgeOp) {
                    it.next();
                    let Some(Token::Id(next)) = it.next() else {
                        return Err(CliError::Input("expected a node after '--'".into()));
                    };
                    add_vertex(&next, &mut vertices);
                    let dup = edges.iter().any(|e| (e.u == prev && e.v == next) || (e.u == next && e.v == prev));
                    if dup && !strict {
                        return Err(CliError::Input(format!("repeated edge {prev} -- {next}")));
                    }
                    if !dup {
                        edges.push(InputEdge { u: prev.clone(), v: next.clone(), m: None });
                    }
                    prev = next;
                }
                match it.peek() {
                    Some(Token::Semi) | Some(Token::RBrace) | Some(Token::Id(_)) => {}
                    Some(Token::Other('[')) => return Err(CliError::Input("DOT attributes are not supported".into())),
                    Some(Token::Other('=')) => {
                        return Err(CliError::Input("DOT graph attributes are not supported".into()))
                    }
                    Some(t) => return Err(CliError::Input(format!("unexpected token {t:?} in DOT input"))),
                    None => {}
                }
            }
            Some(t) => return Err(CliError::Input(format!("unexpected token {t:?} in DOT input"))),
            None => return Err(CliError::Input("missing '}' at end of DOT input".into())),
        }
    }
    if it.next().is_some() {
        return Err(CliError::Input("trailing content after DOT graph".into()));
    }
    Ok(InputDocument { kind: InputKind::Graph, vertices, edges })
}
