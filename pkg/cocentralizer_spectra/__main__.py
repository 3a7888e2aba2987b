from cocentralizer_spectra.cli.main import run

run()
