// zxopt - exhaustive search optimisation of quantum circuits
//         using the ZX-calculus
// Copyright (C) 2026 - the zxopt developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Recursive-descent parser for the OpenQASM 2.0 subset used by the
//! optimiser: a single quantum register and the gates
//! h, x, z, s, sdg, t, tdg, rz, cx, cz, ccx.
//!
//! `ccx` is expanded into its standard 7-T decomposition at parse time.
//! Rotation angles must be exact rational multiples of pi (`pi/4`,
//! `-3*pi/4`, `0`, ...); decimal angles are rejected rather than
//! approximated. Classical registers, measurements and barriers are out of
//! scope and rejected with a clear diagnostic.

use std::fmt;

use thiserror::Error;

use crate::circuit::{Circuit, Gate};
use crate::phase::Phase;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    UnsupportedVersion(String),
    UnsupportedInclude(String),
    UnsupportedStatement(String),
    UnsupportedGate(String),
    UnsupportedAngle(String),
    UnknownRegister(String),
    MultipleRegisters,
    MissingRegister(String),
    QubitOutOfRange { index: usize, size: usize },
    DuplicateQubit(String),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Syntax(msg) => write!(f, "syntax error: {msg}"),
            ParseErrorKind::UnsupportedVersion(v) => {
                write!(f, "unsupported version `{v}`, expected OPENQASM 2.0")
            }
            ParseErrorKind::UnsupportedInclude(inc) => {
                write!(f, "unsupported include \"{inc}\", only \"qelib1.inc\" is tolerated")
            }
            ParseErrorKind::UnsupportedStatement(s) => {
                write!(f, "unsupported statement `{s}`")
            }
            ParseErrorKind::UnsupportedGate(g) => write!(f, "unsupported gate `{g}`"),
            ParseErrorKind::UnsupportedAngle(a) => {
                write!(f, "unsupported angle `{a}`, expected a rational multiple of pi")
            }
            ParseErrorKind::UnknownRegister(r) => write!(f, "unknown register `{r}`"),
            ParseErrorKind::MultipleRegisters => {
                write!(f, "only a single quantum register is supported")
            }
            ParseErrorKind::MissingRegister(g) => {
                write!(f, "gate `{g}` used before any qreg declaration")
            }
            ParseErrorKind::QubitOutOfRange { index, size } => {
                write!(f, "qubit index {index} out of range for register of size {size}")
            }
            ParseErrorKind::DuplicateQubit(g) => {
                write!(f, "gate `{g}` repeats a qubit operand")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {col}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(i64),
    Real(String),
    Str(String),
    Sym(char),
    Eof,
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { chars: src.chars().peekable(), line: 1, col: 1 }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError { line: self.line, col: self.col, kind }
    }

    /// Next token together with its starting position.
    fn next_token(&mut self) -> Result<(Tok, usize, usize), ParseError> {
        loop {
            match self.chars.peek() {
                Some(c) if c.is_whitespace() => {
                    self.bump();
                }
                Some('/') => {
                    let (line, col) = (self.line, self.col);
                    self.bump();
                    if self.chars.peek() == Some(&'/') {
                        while let Some(c) = self.bump() {
                            if c == '\n' {
                                break;
                            }
                        }
                    } else {
                        return Ok((Tok::Sym('/'), line, col));
                    }
                }
                _ => break,
            }
        }
        let (line, col) = (self.line, self.col);
        let c = match self.chars.peek() {
            None => return Ok((Tok::Eof, line, col)),
            Some(&c) => c,
        };
        if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&c) = self.chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    s.push(c);
                    self.bump();
                } else {
                    break;
                }
            }
            return Ok((Tok::Ident(s), line, col));
        }
        if c.is_ascii_digit() {
            let mut s = String::new();
            let mut is_real = false;
            while let Some(&c) = self.chars.peek() {
                if c.is_ascii_digit() {
                    s.push(c);
                    self.bump();
                } else if c == '.' && !is_real {
                    is_real = true;
                    s.push(c);
                    self.bump();
                } else {
                    break;
                }
            }
            if is_real {
                return Ok((Tok::Real(s), line, col));
            }
            let n: i64 = s
                .parse()
                .map_err(|_| self.err(ParseErrorKind::Syntax(format!("integer `{s}` too large"))))?;
            return Ok((Tok::Int(n), line, col));
        }
        if c == '"' {
            self.bump();
            let mut s = String::new();
            loop {
                match self.bump() {
                    Some('"') => break,
                    Some(c) => s.push(c),
                    None => {
                        return Err(self.err(ParseErrorKind::Syntax(
                            "unterminated string literal".into(),
                        )))
                    }
                }
            }
            return Ok((Tok::Str(s), line, col));
        }
        if "[](),;/*-+".contains(c) {
            self.bump();
            return Ok((Tok::Sym(c), line, col));
        }
        Err(self.err(ParseErrorKind::Syntax(format!("unexpected character `{c}`"))))
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    tok: Tok,
    line: usize,
    col: usize,
    register: Option<(String, usize)>,
    circuit: Option<Circuit>,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Result<Self, ParseError> {
        let mut lexer = Lexer::new(src);
        let (tok, line, col) = lexer.next_token()?;
        Ok(Parser { lexer, tok, line, col, register: None, circuit: None })
    }

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError { line: self.line, col: self.col, kind }
    }

    fn syntax(&self, msg: impl Into<String>) -> ParseError {
        self.err(ParseErrorKind::Syntax(msg.into()))
    }

    fn advance(&mut self) -> Result<Tok, ParseError> {
        let (tok, line, col) = self.lexer.next_token()?;
        self.line = line;
        self.col = col;
        Ok(std::mem::replace(&mut self.tok, tok))
    }

    fn expect_sym(&mut self, sym: char) -> Result<(), ParseError> {
        match self.tok {
            Tok::Sym(c) if c == sym => {
                self.advance()?;
                Ok(())
            }
            _ => Err(self.syntax(format!("expected `{sym}`, found {}", describe(&self.tok)))),
        }
    }

    fn expect_int(&mut self) -> Result<i64, ParseError> {
        match self.tok {
            Tok::Int(n) => {
                self.advance()?;
                Ok(n)
            }
            _ => Err(self.syntax(format!("expected an integer, found {}", describe(&self.tok)))),
        }
    }

    fn header(&mut self) -> Result<(), ParseError> {
        match self.advance()? {
            Tok::Ident(s) if s == "OPENQASM" => {}
            t => return Err(self.syntax(format!("expected `OPENQASM`, found {}", describe(&t)))),
        }
        match self.advance()? {
            Tok::Real(v) if v == "2.0" => {}
            Tok::Real(v) => return Err(self.err(ParseErrorKind::UnsupportedVersion(v))),
            Tok::Int(v) => return Err(self.err(ParseErrorKind::UnsupportedVersion(v.to_string()))),
            t => return Err(self.syntax(format!("expected a version number, found {}", describe(&t)))),
        }
        self.expect_sym(';')
    }

    fn qubit_arg(&mut self, gate: &str) -> Result<usize, ParseError> {
        let name = match self.advance()? {
            Tok::Ident(s) => s,
            t => return Err(self.syntax(format!("expected a qubit argument, found {}", describe(&t)))),
        };
        let (reg, size) = self
            .register
            .clone()
            .ok_or_else(|| self.err(ParseErrorKind::MissingRegister(gate.to_string())))?;
        if name != reg {
            return Err(self.err(ParseErrorKind::UnknownRegister(name)));
        }
        self.expect_sym('[')?;
        let idx = self.expect_int()?;
        if idx < 0 || idx as usize >= size {
            return Err(self.err(ParseErrorKind::QubitOutOfRange {
                index: idx.max(0) as usize,
                size,
            }));
        }
        self.expect_sym(']')?;
        Ok(idx as usize)
    }

    /// `[-] (pi [/ int] | int [* pi [/ int]])`, yielding the multiple of pi.
    fn angle(&mut self) -> Result<Phase, ParseError> {
        let mut text = String::new();
        let mut negative = false;
        if self.tok == Tok::Sym('-') {
            negative = true;
            text.push('-');
            self.advance()?;
        }
        let mut numer: i64;
        let has_pi;
        match self.advance()? {
            Tok::Ident(s) if s == "pi" => {
                text.push_str("pi");
                numer = 1;
                has_pi = true;
            }
            Tok::Int(n) => {
                text.push_str(&n.to_string());
                numer = n;
                if self.tok == Tok::Sym('*') {
                    self.advance()?;
                    match self.advance()? {
                        Tok::Ident(s) if s == "pi" => {
                            text.push_str("*pi");
                            has_pi = true;
                        }
                        t => {
                            return Err(self.syntax(format!("expected `pi`, found {}", describe(&t))))
                        }
                    }
                } else {
                    has_pi = false;
                }
            }
            Tok::Real(r) => {
                return Err(self.err(ParseErrorKind::UnsupportedAngle(r)));
            }
            t => return Err(self.syntax(format!("expected an angle, found {}", describe(&t)))),
        }
        let mut denom = 1i64;
        if self.tok == Tok::Sym('/') {
            self.advance()?;
            denom = self.expect_int()?;
            text.push_str(&format!("/{denom}"));
            if denom == 0 {
                return Err(self.err(ParseErrorKind::UnsupportedAngle(text)));
            }
        }
        if !has_pi {
            // a bare literal is radians; only zero is a rational multiple of pi
            if numer != 0 {
                return Err(self.err(ParseErrorKind::UnsupportedAngle(text)));
            }
            return Ok(Phase::zero());
        }
        if negative {
            numer = -numer;
        }
        Ok(Phase::new(numer, denom))
    }

    fn push_gate(&mut self, gate: Gate) -> Result<(), ParseError> {
        let circuit = self.circuit.as_mut().expect("register checked by qubit_arg");
        circuit.push(gate).map_err(|e| match e {
            crate::circuit::CircuitError::DuplicateQubit(g) => {
                self.err(ParseErrorKind::DuplicateQubit(g.to_string()))
            }
            other => self.err(ParseErrorKind::Syntax(other.to_string())),
        })
    }

    fn statement(&mut self, name: String) -> Result<(), ParseError> {
        match name.as_str() {
            "include" => {
                match self.advance()? {
                    Tok::Str(s) if s == "qelib1.inc" => {}
                    Tok::Str(s) => return Err(self.err(ParseErrorKind::UnsupportedInclude(s))),
                    t => {
                        return Err(self.syntax(format!("expected a file name, found {}", describe(&t))))
                    }
                }
                self.expect_sym(';')
            }
            "qreg" => {
                if self.register.is_some() {
                    return Err(self.err(ParseErrorKind::MultipleRegisters));
                }
                let reg = match self.advance()? {
                    Tok::Ident(s) => s,
                    t => {
                        return Err(self.syntax(format!("expected a register name, found {}", describe(&t))))
                    }
                };
                self.expect_sym('[')?;
                let size = self.expect_int()?;
                if size <= 0 {
                    return Err(self.syntax("register size must be positive"));
                }
                self.expect_sym(']')?;
                self.expect_sym(';')?;
                self.register = Some((reg, size as usize));
                self.circuit = Some(Circuit::new(size as usize));
                Ok(())
            }
            "creg" | "measure" | "barrier" | "gate" | "if" | "reset" | "opaque" => {
                Err(self.err(ParseErrorKind::UnsupportedStatement(name)))
            }
            "h" | "x" | "z" | "s" | "sdg" | "t" | "tdg" => {
                let q = self.qubit_arg(&name)?;
                self.expect_sym(';')?;
                let gate = match name.as_str() {
                    "h" => Gate::H(q),
                    "x" => Gate::X(q),
                    "z" => Gate::Z(q),
                    "s" => Gate::S(q),
                    "sdg" => Gate::Sdg(q),
                    "t" => Gate::T(q),
                    _ => Gate::Tdg(q),
                };
                self.push_gate(gate)
            }
            "rz" => {
                self.expect_sym('(')?;
                let phase = self.angle()?;
                self.expect_sym(')')?;
                let q = self.qubit_arg("rz")?;
                self.expect_sym(';')?;
                self.push_gate(Gate::Rz(q, phase))
            }
            "cx" | "cz" => {
                let a = self.qubit_arg(&name)?;
                self.expect_sym(',')?;
                let b = self.qubit_arg(&name)?;
                self.expect_sym(';')?;
                let gate = if name == "cx" { Gate::Cx(a, b) } else { Gate::Cz(a, b) };
                self.push_gate(gate)
            }
            "ccx" => {
                let a = self.qubit_arg("ccx")?;
                self.expect_sym(',')?;
                let b = self.qubit_arg("ccx")?;
                self.expect_sym(',')?;
                let c = self.qubit_arg("ccx")?;
                self.expect_sym(';')?;
                let circuit = self.circuit.as_mut().expect("register checked by qubit_arg");
                circuit.push_ccx(a, b, c).map_err(|e| match e {
                    crate::circuit::CircuitError::DuplicateQubit(g) => {
                        self.err(ParseErrorKind::DuplicateQubit(g.to_string()))
                    }
                    other => self.err(ParseErrorKind::Syntax(other.to_string())),
                })
            }
            other => Err(self.err(ParseErrorKind::UnsupportedGate(other.to_string()))),
        }
    }

    fn program(mut self) -> Result<Circuit, ParseError> {
        self.header()?;
        loop {
            match self.tok.clone() {
                Tok::Eof => break,
                Tok::Ident(name) => {
                    self.advance()?;
                    self.statement(name)?;
                }
                t => return Err(self.syntax(format!("expected a statement, found {}", describe(&t)))),
            }
        }
        match self.circuit.take() {
            Some(c) => Ok(c),
            None => Err(self.err(ParseErrorKind::MissingRegister("<none>".into()))),
        }
    }
}

fn describe(tok: &Tok) -> String {
    match tok {
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Int(n) => format!("`{n}`"),
        Tok::Real(r) => format!("`{r}`"),
        Tok::Str(s) => format!("\"{s}\""),
        Tok::Sym(c) => format!("`{c}`"),
        Tok::Eof => "end of input".into(),
    }
}

/// Parse an OpenQASM 2.0 program into a [`Circuit`].
pub fn parse_qasm(src: &str) -> Result<Circuit, ParseError> {
    Parser::new(src)?.program()
}

/// Canonical one-gate-per-line OpenQASM 2.0 output. Inverse of
/// [`parse_qasm`] on the supported subset, modulo whitespace and angle
/// normalisation into `[0, 2pi)`.
pub fn print_qasm(circuit: &Circuit) -> String {
    let mut out = String::new();
    out.push_str("OPENQASM 2.0;\n");
    out.push_str("include \"qelib1.inc\";\n");
    out.push_str(&format!("qreg q[{}];\n", circuit.num_qubits()));
    for gate in circuit.gates() {
        let line = match *gate {
            Gate::Rz(q, p) => format!("rz({}) q[{}];", format_angle(p), q),
            Gate::Cx(a, b) => format!("cx q[{a}],q[{b}];"),
            Gate::Cz(a, b) => format!("cz q[{a}],q[{b}];"),
            ref g => format!("{} q[{}];", g.name(), g.qubits()[0]),
        };
        out.push_str(&line);
        out.push('\n');
    }
    out
}

fn format_angle(p: Phase) -> String {
    match (p.numer(), p.denom()) {
        (0, _) => "0".to_string(),
        (1, 1) => "pi".to_string(),
        (1, d) => format!("pi/{d}"),
        (n, 1) => format!("{n}*pi"),
        (n, d) => format!("{n}*pi/{d}"),
    }
}
