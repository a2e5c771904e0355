//! Line-oriented diagram manipulation with undo.

use std::io::{BufRead, Write};

use sdualkit_core::brane::{hw_move, linking_numbers, sdual, BraneDiagram};

const HELP: &str = "commands: hw <i>, sdual, linking, dims, undo, quit";

pub struct Repl {
    history: Vec<BraneDiagram>,
}

/// What a single line did.
#[derive(Debug, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub quit: bool,
}

impl Repl {
    pub fn new(initial: BraneDiagram) -> Self {
        Repl { history: vec![initial] }
    }

    pub fn current(&self) -> &BraneDiagram {
        self.history.last().expect("history starts non-empty")
    }

    /// Number of applied moves that can still be undone.
    pub fn depth(&self) -> usize {
        self.history.len() - 1
    }

    pub fn state(&self) -> String {
        format!("{}\nlinking: {}\n", self.current(), linking_numbers(self.current()))
    }

    pub fn execute(&mut self, line: &str) -> Outcome {
        let words: Vec<&str> = line.split_whitespace().collect();
        let reply = |output: String| Outcome { output, quit: false };
        match words.as_slice() {
            [] => reply(String::new()),
            ["quit"] | ["exit"] => Outcome { output: String::new(), quit: true },
            ["help"] => reply(format!("{HELP}\n")),
            ["sdual"] => {
                let next = sdual(self.current());
                self.history.push(next);
                reply(self.state())
            }
            ["hw", i] => match i.parse::<usize>() {
                Ok(i) => match hw_move(self.current(), i) {
                    Ok(next) => {
                        self.history.push(next);
                        reply(self.state())
                    }
                    Err(e) => reply(format!("error: {e}\n{}", self.state())),
                },
                Err(_) => reply(format!("error: expected a brane index, got {i:?}\n")),
            },
            ["linking"] => reply(format!("{}\n", linking_numbers(self.current()))),
            ["dims"] => {
                let dims: Vec<String> = self.current().dims().iter().map(usize::to_string).collect();
                reply(format!("{}\n", dims.join(",")))
            }
            ["undo"] => {
                if self.history.len() > 1 {
                    self.history.pop();
                    reply(self.state())
                } else {
                    reply(format!("error: nothing to undo\n{}", self.state()))
                }
            }
            _ => reply(format!("error: unknown command {line:?}; {HELP}\n")),
        }
    }
}

/// Runs a session until `quit` or end of input.
pub fn run_repl(initial: BraneDiagram, input: impl BufRead, mut output: impl Write) -> std::io::Result<BraneDiagram> {
    let mut repl = Repl::new(initial);
    output.write_all(repl.state().as_bytes())?;
    for line in input.lines() {
        let out = repl.execute(&line?);
        output.write_all(out.output.as_bytes())?;
        if out.quit {
            break;
        }
    }
    output.flush()?;
    Ok(repl.current().clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn start() -> Repl {
        Repl::new("0 o 1 x 1 x 1 o 0".parse().unwrap())
    }

    #[test]
    fn hw_then_undo() {
        let mut r = start();
        let out = r.execute("hw 0");
        assert!(out.output.starts_with("0 x 1 o 1 x 1 o 0\n"));
        r.execute("undo");
        assert_eq!(r.current().to_string(), "0 o 1 x 1 x 1 o 0");
    }

    #[test]
    fn sdual_twice() {
        let mut r = start();
        r.execute("sdual");
        assert_eq!(r.current().to_string(), "0 x 1 o 1 o 1 x 0");
        r.execute("sdual");
        assert_eq!(r.current().to_string(), "0 o 1 x 1 x 1 o 0");
        assert_eq!(r.depth(), 2);
    }

    #[test]
    fn bad_moves_leave_state_alone() {
        let mut r = start();
        let out = r.execute("hw 1");
        assert!(out.output.starts_with("error: branes at 1"));
        assert_eq!(r.depth(), 0);
        assert!(r.execute("undo").output.starts_with("error: nothing to undo"));
        assert!(r.execute("frobnicate").output.starts_with("error: unknown command"));
        assert!(r.execute("quit").quit);
    }

    #[test]
    fn transcript_session() {
        let input = b"hw 0\ndims\nlinking\nundo\nquit\nhw 0\n";
        let mut out = Vec::new();
        let end = run_repl("0 o 1 x 1 x 1 o 0".parse().unwrap(), &input[..], &mut out).unwrap();
        assert_eq!(end.to_string(), "0 o 1 x 1 x 1 o 0");
        let text = String::from_utf8(out).unwrap();
        assert_eq!(
            text,
            "0 o 1 x 1 x 1 o 0\nlinking: ns5 {1,1}  d5 {1,1}\n\
             0 x 1 o 1 x 1 o 0\nlinking: ns5 {1,1}  d5 {1,1}\n\
             0,1,1,1,0\n\
             ns5 {1,1}  d5 {1,1}\n\
             0 o 1 x 1 x 1 o 0\nlinking: ns5 {1,1}  d5 {1,1}\n"
        );
    }
}
