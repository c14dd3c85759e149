import json
import subprocess
import sys

import pytest

from richwords.cli import AnalysisReport, analyze, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_periodic(capsys):
    code, out, _ = run(capsys, "--json", "analyze", "periodic:aabbaabab")
    d = json.loads(out)
    assert code == 0 and d["richness"]["is_rich"] and d["periodic"]["power_rich"]
    assert d["window"] == 27 and d["version"]


def test_analyze_word(capsys):
    code, out, _ = run(capsys, "analyze", "abbabaabba", "--json", "--oracle")
    d = json.loads(out)
    assert code == 0 and not d["richness"]["is_rich"] and d["richness"]["defect"] >= 1


def test_analyze_oddities(capsys):
    code, out, _ = run(capsys, "analyze", "periodic:abcabcacbacb", "--json", "--oracle")
    d = json.loads(out)["richness"]
    assert len(d["oddities"]) == 3 and d["defect"] == 4


def test_window_flag(capsys):
    code, out, _ = run(capsys, "--window", "10", "--json", "analyze", "periodic:abc")
    assert json.loads(out)["window"] == 10


def test_report_round_trip():
    for text in ["periodic:abcabcacbacb", "abbabaabba", "morphic:a=ab,b=a;seed=a", "evper:c|ab"]:
        r = analyze(text, complexity=5, with_ups=True)
        again = AnalysisReport.from_json(json.loads(json.dumps(r.to_json())))
        assert again == r


def test_generate(capsys):
    assert run(capsys, "generate", "thue-morse", "10")[1].strip() == "abbabaabba"
    assert run(capsys, "generate", "fraenkel", "3")[1].strip() == "1213121"
    assert run(capsys, "generate", "episturmian", "abc", "7")[1].strip() == "abacaba"
    assert run(capsys, "generate", "fibonacci", "8")[1].strip() == "abaababa"
    assert run(capsys, "generate", "wr-family", "family1(k=3,n=1)", "8")[1].strip() == "12131213"
    assert run(capsys, "generate", "fixed-point", "a=aba,b=bb", "a", "8")[1].strip() == "ababbaba"


def test_enumerate(capsys):
    code, out, _ = run(capsys, "--json", "enumerate", "rich", "2", "5")
    assert json.loads(out)["counts"] == {str(n): 2 ** n for n in range(6)}
    code, out, _ = run(capsys, "enumerate", "counterexample-hunt", "theorem-p1", "3", "8")
    assert out.startswith("none found")
    code, out, _ = run(capsys, "--json", "enumerate", "balanced-wr", "3", "10")
    assert json.loads(out)["all_matched"]


def test_morphism_commands(capsys):
    code, out, _ = run(capsys, "--json", "morphism", "classify-p", "a=baa,b=baba")
    d = json.loads(out)
    assert d["p"] == "b" and d["standard"] and "special_bound" in d
    assert run(capsys, "morphism", "fixed-point-class", "a=aabbaa,b=bab", "a")[1].strip() == "InfiniteDefect"
    assert run(capsys, "morphism", "fixed-point-class", "a=abb,b=ac,c=a", "a")[1].strip() == "Rich"
    assert run(capsys, "morphism", "special-test", "a=aabbaa,b=bab",
               "morphic:a=ab,b=a;seed=a")[1].strip() == "rich"
    assert run(capsys, "morphism", "apply", "a=a,b=ab,c=ac", "abca")[1].strip() == "aabaca"
    assert run(capsys, "morphism", "iterate", "a=aba,b=bb", "a", "2")[1].strip() == "ababbaba"
    assert run(capsys, "morphism", "classify-p", "a=ab,b=ba")[1].strip() == "not class P"


def test_periodic_balance_returns(capsys):
    d = json.loads(run(capsys, "--json", "periodic", "aabacabaac")[1])
    assert d["defect"] == 2 and d["defective_positions"] == [10, 11]
    assert json.loads(run(capsys, "--json", "periodic", "abc")[1])["defect"] == "infinite"
    d = json.loads(run(capsys, "--json", "balance", "periodic:1213121")[1])
    assert d["balanced"] and d["wr_family"]["family"] == "family2(k=3,j=1)"
    d = json.loads(run(capsys, "--json", "returns", "abaca", "a")[1])
    assert [r["word"] for r in d["returns"]] == ["aba", "aca"]


def test_file_input(capsys, tmp_path):
    f = tmp_path / "w.txt"
    f.write_text("abba\nbaab\n")
    d = json.loads(run(capsys, "--json", "analyze", f"@{f}")[1])
    assert d["richness"]["word"] == "abbabaab"


def test_exit_codes(capsys):
    assert run(capsys, "analyze", "a-b")[0] == 2
    assert run(capsys, "analyze", "periodic:")[0] == 2
    assert run(capsys, "enumerate", "counterexample-hunt", "nope", "2", "3")[0] == 2
    with pytest.raises(SystemExit) as e:
        main(["generate", "nope"])
    assert e.value.code == 2
    assert run(capsys, "morphism", "fixed-point-class", "a=ab,b=ba", "a")[0] == 2


def test_oracle_divergence_exit_code(capsys, monkeypatch):
    from richwords import cli
    monkeypatch.setattr(cli.oracle, "naive_defect", lambda w: -1)
    code, _, err = run(capsys, "--oracle", "analyze", "abba")
    assert code == 3 and "divergence" in err


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "richwords", "generate", "fraenkel", "2"],
                         capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "121"
