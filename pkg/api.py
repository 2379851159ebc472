from flask import Flask, request, jsonify
import traceback
from pydantic import ValidationError

import utils
from bisim import bisim_game, mode_mapping
from calculi import (
    WorkbenchError,
    cbn_trace,
    cbv_trace,
    parse_term,
    parse_vterm,
    print_term,
)
from pi import (
    canonical_print,
    congruence_oracle,
    congruent,
    parse_process,
    pi_successors,
    print_process,
)
from translations import encode_cbn, encode_cbv
from workbench import SUITES, SuiteBounds, run_suite

app = Flask(__name__)


def error_response(e: Exception, where: str):
    if isinstance(e, (WorkbenchError, ValidationError)):
        return jsonify({"error": str(e)}), 400
    error_details = traceback.format_exc()
    print(f"Error {where}: {str(e)}")
    print(f"Error details: {error_details}")
    return jsonify({"error": str(e), "details": error_details}), 500


def parse_mode(data: dict) -> str:
    mode = data.get("mode", "cbn")
    if mode not in mode_mapping:
        raise WorkbenchError(f"Unknown mode: {mode}. Only {', '.join(mode_mapping)} are supported.")
    return mode


def parse_for(mode: str, text: str):
    return parse_term(text) if mode == "cbn" else parse_vterm(text)


@app.route('/api/encode', methods=['POST'])
def encode():
    """Translate a term into a process"""
    data = request.get_json(silent=True) or {}
    if not data.get('term'):
        return jsonify({"error": "Term is required"}), 400

    try:
        mode = parse_mode(data)
        t = parse_for(mode, data['term'])
        p, _ = encode_cbn(t) if mode == "cbn" else encode_cbv(t)
        return jsonify({
            "schema": 1,
            "mode": mode,
            "term": print_term(t),
            "process": print_process(p),
            "canonical": canonical_print(p),
        })
    except Exception as e:
        return error_response(e, "encoding term")


@app.route('/api/trace', methods=['POST'])
def trace():
    """Run a strategy on a term"""
    data = request.get_json(silent=True) or {}
    if not data.get('term'):
        return jsonify({"error": "Term is required"}), 400

    try:
        mode = parse_mode(data)
        fuel = int(data.get('fuel', utils.DEFAULT_FUEL))
        t = parse_for(mode, data['term'])
        if mode == "cbn":
            result = cbn_trace(t, fuel)
        else:
            result = cbv_trace(t, fuel, policy=data.get('policy', 'leftmost'))
        return jsonify({"schema": 1, "mode": mode, **result.to_dict()})
    except Exception as e:
        return error_response(e, "tracing term")


@app.route('/api/step', methods=['POST'])
def step():
    """Every distance step of a process"""
    data = request.get_json(silent=True) or {}
    if not data.get('process'):
        return jsonify({"error": "Process is required"}), 400

    try:
        p = parse_process(data['process'])
        strict = bool(data.get('strict', utils.DEFAULT_STRICT))
        steps = [
            {"redex": r.describe(), "kind": r.kind, "reduct": print_process(q)}
            for r, q in pi_successors(p, strict=strict)
        ]
        return jsonify({"schema": 1, "process": print_process(p), "steps": steps})
    except Exception as e:
        return error_response(e, "stepping process")


@app.route('/api/congruent', methods=['POST'])
def congruence():
    """Decide structural congruence of two processes"""
    data = request.get_json(silent=True) or {}
    if not data.get('left') or not data.get('right'):
        return jsonify({"error": "Both left and right processes are required"}), 400

    try:
        p, q = parse_process(data['left']), parse_process(data['right'])
        response = {
            "schema": 1,
            "left": canonical_print(p),
            "right": canonical_print(q),
            "congruent": congruent(p, q),
        }
        if 'depth' in data:
            response["oracle"] = congruence_oracle(p, q, int(data['depth']))
        return jsonify(response)
    except Exception as e:
        return error_response(e, "deciding congruence")


@app.route('/api/bisim', methods=['POST'])
def bisim():
    """Play the bisimulation game on a term"""
    data = request.get_json(silent=True) or {}
    if not data.get('term'):
        return jsonify({"error": "Term is required"}), 400

    try:
        mode = parse_mode(data)
        t = parse_for(mode, data['term'])
        report = bisim_game(t, mode, int(data.get('fuel', utils.DEFAULT_FUEL)))
        return jsonify(report.to_dict())
    except Exception as e:
        return error_response(e, "playing bisimulation game")


@app.route('/api/suites', methods=['GET'])
def list_suites():
    """List all property suites"""
    return jsonify({"suites": {name: s.description for name, s in SUITES.items()}})


@app.route('/api/suites/<name>', methods=['POST'])
def suite(name):
    """Run one property suite"""
    if name not in SUITES:
        return jsonify({"error": f"Suite not found: {name}"}), 404

    try:
        bounds = SuiteBounds(**(request.get_json(silent=True) or {}))
        return jsonify(run_suite(name, bounds).to_dict())
    except Exception as e:
        return error_response(e, "running suite")


if __name__ == '__main__':
    app.run(debug=True, host='0.0.0.0', port=5000)
