import click

from app.main.controller.options import depth_options, emit, weight_options
from app.main.model.character import LinkageClassSchema
from app.main.model.request import Subcommand, build_request
from app.main.service.character_service import (
    character_schema, decomposition_multiplicities, irreducible_character,
)


@click.command()
@weight_options
@depth_options
def char(cartan_type, weight, json_output, cache_dir, depth, max_depth):
    """Character of L(lambda) truncated at the given depth"""
    request = build_request(subcommand=Subcommand.CHAR, cartan_type=cartan_type, weight=weight, depth=depth,
                            max_depth=max_depth, json_output=json_output, cache_dir=cache_dir)
    character, terms = irreducible_character(request.parsed_weight(), request.checked_depth(), request.cartan(),
                                             request.cache_dir)
    schema = character_schema(character, terms)
    lines = [f"ch L({schema.base_weight}) to depth {schema.depth}:"]
    lines += [f"  xi={term.xi}: {term.coeff}" for term in schema.terms]
    lines.append("formula:")
    lines += [f"  {'+' if t.sign > 0 else '-'}{t.kl_at_1} ch M(y o mu), y={t.y_word}" for t in schema.formula]
    emit(schema, json_output, "\n".join(lines))


@click.command()
@weight_options
@depth_options
def decomp(cartan_type, weight, json_output, cache_dir, depth, max_depth):
    """Character and multiplicity matrices of the linkage class below lambda"""
    request = build_request(subcommand=Subcommand.DECOMP, cartan_type=cartan_type, weight=weight, depth=depth,
                            max_depth=max_depth, json_output=json_output, cache_dir=cache_dir)
    data = decomposition_multiplicities(request.parsed_weight(), request.checked_depth(), request.cartan(),
                                        request.cache_dir)
    schema = LinkageClassSchema(**data.to_dict())
    lines = [f"dominant weight: {schema.dominant_weight} ({schema.chamber})", "representatives:"]
    lines += [f"  {rep} at {offset}" for rep, offset in zip(schema.representatives, schema.row_offsets)]
    lines.append("coefficients:")
    lines += ["  " + " ".join(f"{v:3d}" for v in row) for row in schema.coefficients]
    lines.append("multiplicities:")
    lines += ["  " + " ".join(f"{v:3d}" for v in row) for row in schema.multiplicities or []]
    emit(schema, json_output, "\n".join(lines))
