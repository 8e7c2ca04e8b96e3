import json

import pytest

import oasis2

NS = "urn:example:swb#"


def ref_exactly(iri):
    return {"exactly": iri}


def template_spec():
    return {
        "agent": NS + "ERC721_standard",
        "behaviours": [
            {
                "id": NS + "mint_ERC721_token_behaviour",
                "goals": [
                    {
                        "id": NS + "mint_ERC721_token_goal",
                        "tasks": [
                            {
                                "id": NS + "mint_ERC721_token_task",
                                "operator": ref_exactly(NS + "mint"),
                                "argument": ref_exactly(NS + "blockchain_digital_token"),
                                "object": {
                                    "as_new": NS + "ERC721_token_template",
                                    "classes": [NS + "EthereumTokenERC721"],
                                },
                                "outputs": [
                                    {
                                        "as_new": NS + "ERC721_token_template",
                                        "classes": [NS + "EthereumTokenERC721"],
                                    }
                                ],
                            }
                        ],
                    }
                ],
            }
        ],
    }


def test_build_and_validate():
    g = oasis2.build_template(json.dumps(template_spec()))
    assert g.node_count() == 12
    assert g.edge_count() == 12
    assert g.has_node(NS + "mint_ERC721_token_task")
    assert oasis2.validate(g) == []


def test_round_trip_is_canonical():
    g = oasis2.build_template(json.dumps(template_spec()))
    text = oasis2.serialize(g, prefix_hints={NS: "swb"})
    again = oasis2.parse(text)
    assert again == g
    assert oasis2.serialize(again, prefix_hints={NS: "swb"}) == text
    assert "@prefix swb:" in text


def test_validate_reports_violations():
    g = oasis2.parse(
        "@prefix oasis: <urn:oasis2:core#> .\n"
        "@prefix swb: <%s> .\n"
        "swb:t a oasis:TaskDescription, oasis:TemplateThing .\n" % NS
    )
    report = oasis2.validate(g)
    assert report, "a task without an operator should not be conformant"
    rule, subjects, message = report[0]
    assert rule == "V2"
    assert subjects == [NS + "t"]
    assert message


def test_parse_errors():
    with pytest.raises(oasis2.TurtleSyntaxError):
        oasis2.parse("swb:x swb:y\n")
    with pytest.raises(oasis2.Oasis2Error):
        oasis2.build_template("{}")


def test_dot_export():
    g = oasis2.build_template(json.dumps(template_spec()))
    dot = oasis2.to_dot(g)
    assert dot.startswith("digraph")
    assert "mint_ERC721_token_task" in dot


def test_demo_and_trace(tmp_path):
    execution, log = oasis2.run_demo(tmp_path / "demo")
    assert oasis2.validate(execution) == []
    lines = log.strip().split("\n")
    assert [line.split("\t")[3] for line in lines] == [
        "Submitted",
        "Matched",
        "Entrusted",
        "Executed",
    ]
    assert (tmp_path / "demo" / "execution.ttl").exists()

    chain = oasis2.trace(execution, NS + "SWB_mint_token_task_execution")
    assert chain["behaviour_task"] == NS + "SWB_mint_token_task"
    assert chain["template_task"] == NS + "mint_ERC721_token_task"
    assert chain["plan_task"] == NS + "buy_token32_task"
    assert chain["performer"] == NS + "SWB_smart_contract"

    # same seed twice gives byte-identical artifacts
    _, log2 = oasis2.run_demo(tmp_path / "demo2")
    assert log2 == log


def test_discover_finds_the_contract(tmp_path):
    oasis2.run_demo(tmp_path / "demo")
    plan = oasis2.parse((tmp_path / "demo" / "plan.ttl").read_text())
    kb = oasis2.parse((tmp_path / "demo" / "behaviour.ttl").read_text())
    choices = oasis2.discover(plan, kb)
    assert list(choices) == [NS + "buy_token32_task"]
    (candidate,) = choices[NS + "buy_token32_task"]
    assert candidate["agent"] == NS + "SWB_smart_contract"
    assert candidate["task"] == NS + "SWB_mint_token_task"
