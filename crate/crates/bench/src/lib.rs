// nothing here; see benches/
