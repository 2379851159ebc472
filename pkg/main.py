import utils
from bisim import bisim_game
from calculi import WorkbenchError, is_vker, parse_term


def main(fuel: int = utils.DEFAULT_FUEL):
    while True:
        user_input = input("> ").strip()
        if user_input in ("", "quit", "exit"):
            break
        try:
            t = parse_term(user_input)
        except WorkbenchError as e:
            print(f"error: {e}")
            continue
        modes = ["cbn", "cbv"] if is_vker(t) else ["cbn"]
        for mode in modes:
            report = bisim_game(t, mode, fuel, print_steps=True)
            print(f"{mode}: {'bisimilar' if report.ok else 'MISMATCH'} ({report.states} states)")
            if not report.ok:
                utils.pp(report.to_dict())


if __name__ == "__main__":
    main()
