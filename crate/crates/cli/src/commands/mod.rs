//! Subcommand implementations returning text and JSON renderings.

pub mod pair;
pub mod pick;
pub mod tilt;
pub mod walls;

use serde_json::Value;

/// Result of a command in both output formats.
#[derive(Clone, Debug, PartialEq)]
pub struct Output {
    pub text: String,
    pub json: Value,
}

impl Output {
    pub fn render(&self, json: bool) -> String {
        if json {
            let mut s = serde_json::to_string_pretty(&self.json).expect("JSON values serialize");
            s.push('\n');
            s
        } else {
            self.text.clone()
        }
    }
}
