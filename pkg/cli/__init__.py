"""
Command line surface: text formats, corpus sources and report rendering
"""

from .parsers import ParseError, parse_fusion, parse_group_table, parse_matrix, parse_morphism, parse_scheme, read_text
from .report import ReportFormat, emit_report, exit_code, format_check_line
from .sources import format_entry, generate, load_entry

__all__ = [
    'ParseError',
    'ReportFormat',
    'emit_report',
    'exit_code',
    'format_check_line',
    'format_entry',
    'generate',
    'load_entry',
    'parse_fusion',
    'parse_group_table',
    'parse_matrix',
    'parse_morphism',
    'parse_scheme',
    'read_text',
]
