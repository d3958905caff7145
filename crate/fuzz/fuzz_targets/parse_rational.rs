#![no_main]
use curried::Rational;
use libfuzzer_sys::fuzz_target;

fn parse(s: &str) -> Result<Rational, curried::ParseError> {
    s.parse()
}

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        let _ = parse(s);
    }
});
