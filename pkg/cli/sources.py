"""
Corpus sources: files in the text formats or generator specs such as gen:cyclic:5
"""
import logging
from typing import Callable, Dict, List

import config
from cli.parsers import ParseError, parse_fusion, parse_group_table, parse_scheme, read_text, tokenize
from fusion import format_fusion, gen_fibonacci, gen_group_fusion, gen_ising
from models import CorpusEntry, SourceKind
from scheme import GenerationError, format_scheme, gen_cyclic, gen_group, gen_hamming, gen_johnson

logger = logging.getLogger(__name__)

GENERATOR_PREFIX = "gen:"


def _params(spec: str, raw: str, count: int) -> List[int]:
    try:
        values = [int(v) for v in raw.split(",")] if raw else []
    except ValueError:
        raise ParseError(f"generator {spec!r} takes integer parameters") from None
    if len(values) != count:
        raise ParseError(f"generator {spec!r} takes {count} parameter(s), got {len(values)}")
    return values


GENERATORS: Dict[str, Callable[[str, str], CorpusEntry]] = {
    "cyclic": lambda spec, raw: CorpusEntry(
        source=spec, kind=SourceKind.SCHEME, payload=gen_cyclic(*_params(spec, raw, 1))
    ),
    "hamming": lambda spec, raw: CorpusEntry(
        source=spec, kind=SourceKind.SCHEME, payload=gen_hamming(*_params(spec, raw, 2))
    ),
    "johnson": lambda spec, raw: CorpusEntry(
        source=spec, kind=SourceKind.SCHEME, payload=gen_johnson(*_params(spec, raw, 2))
    ),
    "group": lambda spec, raw: CorpusEntry(
        source=spec, kind=SourceKind.SCHEME, payload=gen_group(parse_group_table(read_text(raw)))
    ),
    "s3": lambda spec, raw: CorpusEntry(
        source=spec, kind=SourceKind.SCHEME, payload=gen_group(config.S3_CAYLEY_TABLE)
    ),
    "fibonacci": lambda spec, raw: CorpusEntry(source=spec, kind=SourceKind.FUSION, payload=gen_fibonacci()),
    "ising": lambda spec, raw: CorpusEntry(source=spec, kind=SourceKind.FUSION, payload=gen_ising()),
    "zn": lambda spec, raw: CorpusEntry(
        source=spec, kind=SourceKind.FUSION, payload=gen_group_fusion(*_params(spec, raw, 1))
    ),
}

# generators that take no parameters
_BARE = {"s3", "fibonacci", "ising"}


def generate(spec: str) -> CorpusEntry:
    """Evaluate a gen:<family>[:<params>] spec"""
    family, _, raw = spec[len(GENERATOR_PREFIX):].partition(":")
    if family not in GENERATORS:
        raise ParseError(f"unknown generator {family!r} in {spec!r}")
    if family in _BARE and raw:
        raise ParseError(f"generator {spec!r} takes no parameters")
    try:
        entry = GENERATORS[family](spec, raw)
    except GenerationError as e:
        raise ParseError(f"{spec}: {e}") from e
    logger.info(f"generated {entry.kind.value} from {spec}")
    return entry


def load_entry(source: str) -> CorpusEntry:
    """A generator spec or a file whose header names its format"""
    if source.startswith(GENERATOR_PREFIX):
        return generate(source)
    text = read_text(source)
    lines = tokenize(text)
    kind = lines[0].keyword if lines else ""
    if kind == "scheme":
        return CorpusEntry(source=source, kind=SourceKind.SCHEME, payload=parse_scheme(text))
    if kind == "fusion":
        return CorpusEntry(source=source, kind=SourceKind.FUSION, payload=parse_fusion(text))
    if not lines:
        raise ParseError("empty input", 1, 1)
    raise lines[0].error(f"unknown format {kind!r}, expected 'scheme v1' or 'fusion v1'")


def format_entry(entry: CorpusEntry) -> str:
    if entry.kind == SourceKind.SCHEME:
        return format_scheme(entry.payload)
    return format_fusion(entry.payload)
