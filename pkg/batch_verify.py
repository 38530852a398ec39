import re, sys
from verify_l11 import verify

pat = re.compile(r"L11 PAIR HIT: (\[[^\]]*\]) K strands \((\d), (\d)\) role (\w+) slopes (-?\d+) (-?\d+)")
rows = []
for line in open("l11pair.log"):
    m = pat.match(line.strip())
    if m:
        rows.append((eval(m.group(1)), int(m.group(2)), int(m.group(3)),
                     m.group(4), int(m.group(5))))
print(len(rows), "hits to verify")
found = {"353": [], "384": []}
for i, (w, ka, kb, role, v) in enumerate(rows):
    singles = [s for s in range(4) if s not in (ka, kb)]
    c, d2 = singles
    if role == "K2":
        sc = {ka: 0, kb: 0, c: 1, d2: 2}
    elif role == "Kc":
        sc = {c: 0, ka: 1, kb: 1, d2: 2}
    else:
        sc = {d2: 0, ka: 1, kb: 1, c: 2}
    try:
        got = verify(w, 4, sc, verbose=False)
    except Exception as e:
        print(i, w, role, "ERROR", e, flush=True)
        continue
    if got:
        found[got].append((w, ka, kb, role))
        print(i, w, (ka, kb), role, "->", got, flush=True)
print("summary: 353:", len(found["353"]), " 384:", len(found["384"]))
if found["353"]:
    print("first 353:", found["353"][0])
if found["384"]:
    print("first 384:", found["384"][0])
