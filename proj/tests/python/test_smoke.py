# Copyright 2026 The Arbocount Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Smoke tests for the Python bindings and the command line tool."""

import itertools
import json
import os
import subprocess

import pytest

import arbocount


def brute_cliques(graph, k):
    adj = {v: set(graph.neighbors(v)) for v in range(graph.num_vertices)}
    return sum(
        1
        for c in itertools.combinations(range(graph.num_vertices), k)
        if all(b in adj[a] for a, b in itertools.combinations(c, 2))
    )


def test_graph_round_trip(tmp_path):
    g = arbocount.Graph.from_edges([(0, 1), (1, 2), (2, 0), (2, 3)], 5)
    assert g.num_vertices == 5
    assert g.num_edges == 4
    assert g.degree(2) == 3
    assert g.neighbors(2) == [0, 1, 3]
    assert g.has_edge(3, 2)
    path = str(tmp_path / "g.txt")
    arbocount.write_edge_list(g, path)
    back = arbocount.read_edge_list(path)
    assert back.edges() == g.edges()


def test_exact_counts_match_brute_force():
    g = arbocount.generate({"family": "incremental", "n": 14, "alpha": 4, "seed": 3})
    for k in (3, 4):
        assert arbocount.count_cliques(g, k) == brute_cliques(g, k)
    assert arbocount.degeneracy(g) <= 4
    assert len(arbocount.enumerate_cliques(g, 3)) == arbocount.count_cliques(g, 3)


def test_thresholds_top_level_is_one():
    th = arbocount.thresholds(3, 2.0, 10.0, 0.5)
    assert th["tau_hi"][3] == 1.0
    assert th["eps"] == pytest.approx(1.0 / 18.0)


def test_estimate_record():
    g = arbocount.generate({"family": "complete", "size": 5})
    rec = arbocount.estimate(g, 3, nk_guess=10, seed=4, exact=True)
    assert rec["status"] == "ok"
    assert rec["exact"] == 10
    assert rec["estimate"] >= 0
    again = arbocount.estimate(g, 3, nk_guess=10, seed=4, exact=True)
    assert again == rec


def test_bad_arguments_raise():
    g = arbocount.generate({"family": "complete", "size": 4})
    with pytest.raises(ValueError):
        arbocount.estimate(g, 3, profile="nope")
    with pytest.raises(ValueError):
        arbocount.generate({"family": "cycle", "size": 2})


@pytest.mark.skipif("ARBOCOUNT_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_exact(tmp_path):
    cli = os.environ["ARBOCOUNT_CLI"]
    out = str(tmp_path / "k6.txt")
    subprocess.run([cli, "generate", "--family", "complete", "--size", "6", "-o", out], check=True,
                   capture_output=True)
    res = subprocess.run([cli, "exact", out, "--k", "3", "--json"], check=True, capture_output=True, text=True)
    assert json.loads(res.stdout)["count"] == 20
