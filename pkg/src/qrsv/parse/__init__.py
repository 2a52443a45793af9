from qrsv.parse.nahm_spec import parse_nahm_spec
from qrsv.parse.parser import ParseFailure, parse_expr
from qrsv.parse.printer import to_source

__all__ = ["ParseFailure", "parse_expr", "parse_nahm_spec", "to_source"]
