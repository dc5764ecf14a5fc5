"""Generate the approximate sample WAN topology files.

Coordinates are public city locations; link sets are hand-drawn to match
the published site/link counts of each network and to stay connected.
These files are illustrative, not the real fiber routes.
"""

import json
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "src" / "georack" / "data"

# name: (lat, lon); gateways marked separately
RNP_SITES = {
    "Porto Alegre": (-30.03, -51.23), "Florianopolis": (-27.60, -48.55),
    "Curitiba": (-25.43, -49.27), "Sao Paulo": (-23.55, -46.63),
    "Rio de Janeiro": (-22.91, -43.17), "Vitoria": (-20.32, -40.34),
    "Belo Horizonte": (-19.92, -43.94), "Campo Grande": (-20.45, -54.62),
    "Cuiaba": (-15.60, -56.10), "Goiania": (-16.68, -49.25),
    "Brasilia": (-15.79, -47.88), "Palmas": (-10.24, -48.36),
    "Salvador": (-12.97, -38.50), "Aracaju": (-10.91, -37.07),
    "Maceio": (-9.67, -35.74), "Recife": (-8.05, -34.90),
    "Joao Pessoa": (-7.12, -34.86), "Campina Grande": (-7.23, -35.88),
    "Natal": (-5.79, -35.21), "Fortaleza": (-3.72, -38.54),
    "Teresina": (-5.09, -42.80), "Sao Luis": (-2.53, -44.30),
    "Belem": (-1.46, -48.49), "Macapa": (0.03, -51.07),
    "Manaus": (-3.12, -60.02), "Boa Vista": (2.82, -60.67),
    "Porto Velho": (-8.76, -63.90),
}
RNP_GATEWAYS = {"Sao Paulo", "Rio de Janeiro", "Fortaleza", "Porto Alegre"}
RNP_LINKS = [
    ("Porto Alegre", "Florianopolis"), ("Porto Alegre", "Curitiba"),
    ("Florianopolis", "Curitiba"), ("Curitiba", "Sao Paulo"),
    ("Sao Paulo", "Rio de Janeiro"), ("Sao Paulo", "Campo Grande"),
    ("Sao Paulo", "Belo Horizonte"), ("Sao Paulo", "Brasilia"),
    ("Rio de Janeiro", "Vitoria"), ("Rio de Janeiro", "Belo Horizonte"),
    ("Rio de Janeiro", "Brasilia"), ("Vitoria", "Salvador"),
    ("Belo Horizonte", "Brasilia"), ("Campo Grande", "Cuiaba"),
    ("Cuiaba", "Goiania"), ("Goiania", "Brasilia"),
    ("Brasilia", "Palmas"), ("Brasilia", "Salvador"),
    ("Palmas", "Belem"), ("Salvador", "Aracaju"),
    ("Aracaju", "Maceio"), ("Maceio", "Recife"),
    ("Recife", "Joao Pessoa"), ("Recife", "Campina Grande"),
    ("Joao Pessoa", "Natal"), ("Campina Grande", "Natal"),
    ("Natal", "Fortaleza"), ("Fortaleza", "Teresina"),
    ("Teresina", "Sao Luis"), ("Sao Luis", "Belem"),
    ("Belem", "Macapa"), ("Belem", "Manaus"),
    ("Manaus", "Boa Vista"),
]
# 27 sites, 33 links; Porto Velho reaches the core via Cuiaba
RNP_LINKS += [("Porto Velho", "Cuiaba")]
RNP_LINKS.remove(("Brasilia", "Salvador"))

RENATER_SITES = {
    "Paris": (48.86, 2.35), "Versailles": (48.80, 2.13),
    "Orsay": (48.70, 2.19), "Compiegne": (49.42, 2.83),
    "Amiens": (49.89, 2.30), "Lille": (50.63, 3.06),
    "Reims": (49.26, 4.03), "Metz": (49.12, 6.18),
    "Nancy": (48.69, 6.18), "Strasbourg": (48.57, 7.75),
    "Mulhouse": (47.75, 7.34), "Besancon": (47.24, 6.02),
    "Dijon": (47.32, 5.04), "Troyes": (48.30, 4.07),
    "Orleans": (47.90, 1.90), "Tours": (47.39, 0.69),
    "Le Mans": (48.00, 0.20), "Caen": (49.18, -0.37),
    "Rouen": (49.44, 1.10), "Rennes": (48.11, -1.68),
    "Brest": (48.39, -4.49), "Lorient": (47.75, -3.37),
    "Nantes": (47.22, -1.55), "Angers": (47.47, -0.55),
    "Poitiers": (46.58, 0.34), "La Rochelle": (46.16, -1.15),
    "Limoges": (45.83, 1.26), "Clermont-Ferrand": (45.78, 3.08),
    "Bordeaux": (44.84, -0.58), "Pau": (43.30, -0.37),
    "Bayonne": (43.49, -1.48), "Toulouse": (43.60, 1.44),
    "Perpignan": (42.70, 2.90), "Montpellier": (43.61, 3.88),
    "Nimes": (43.84, 4.36), "Avignon": (43.95, 4.81),
    "Marseille": (43.30, 5.37), "Marseille Luminy": (43.23, 5.43),
    "Toulon": (43.12, 5.93), "Nice": (43.70, 7.27),
    "Grenoble": (45.19, 5.72), "Chambery": (45.56, 5.92),
    "Annecy": (45.90, 6.13), "Lyon": (45.76, 4.84),
    "Saint-Etienne": (45.44, 4.39),
}
RENATER_GATEWAYS = {"Paris", "Lyon", "Marseille"}
RENATER_LINKS = [
    ("Paris", "Versailles"), ("Paris", "Orsay"), ("Versailles", "Orsay"),
    ("Paris", "Compiegne"), ("Compiegne", "Amiens"), ("Amiens", "Lille"),
    ("Paris", "Lille"), ("Lille", "Reims"), ("Paris", "Reims"),
    ("Reims", "Metz"), ("Metz", "Nancy"), ("Nancy", "Strasbourg"),
    ("Strasbourg", "Mulhouse"), ("Mulhouse", "Besancon"),
    ("Besancon", "Dijon"), ("Dijon", "Troyes"), ("Troyes", "Paris"),
    ("Dijon", "Lyon"), ("Paris", "Orleans"), ("Orleans", "Tours"),
    ("Tours", "Le Mans"), ("Le Mans", "Paris"), ("Le Mans", "Caen"),
    ("Caen", "Rouen"), ("Rouen", "Paris"), ("Caen", "Rennes"),
    ("Rennes", "Brest"), ("Brest", "Lorient"), ("Lorient", "Nantes"),
    ("Rennes", "Nantes"), ("Nantes", "Angers"), ("Angers", "Le Mans"),
    ("Nantes", "La Rochelle"), ("La Rochelle", "Poitiers"),
    ("Poitiers", "Tours"), ("Poitiers", "Limoges"),
    ("Limoges", "Clermont-Ferrand"), ("Clermont-Ferrand", "Lyon"),
    ("Clermont-Ferrand", "Saint-Etienne"), ("Saint-Etienne", "Lyon"),
    ("La Rochelle", "Bordeaux"), ("Bordeaux", "Limoges"),
    ("Bordeaux", "Bayonne"), ("Bayonne", "Pau"), ("Pau", "Toulouse"),
    ("Bordeaux", "Toulouse"), ("Toulouse", "Perpignan"),
    ("Perpignan", "Montpellier"), ("Montpellier", "Nimes"),
    ("Nimes", "Avignon"), ("Avignon", "Marseille"),
    ("Marseille", "Marseille Luminy"), ("Marseille Luminy", "Toulon"),
    ("Toulon", "Nice"), ("Nice", "Marseille"), ("Avignon", "Lyon"),
    ("Lyon", "Grenoble"), ("Grenoble", "Chambery"),
    ("Chambery", "Annecy"), ("Annecy", "Lyon"),
]
# trim to 54 links, keeping connectivity and a few rings
for drop in [("Paris", "Lille"), ("Paris", "Reims"), ("Dijon", "Troyes"),
             ("Versailles", "Orsay"), ("Nice", "Marseille"),
             ("Bordeaux", "Toulouse")]:
    RENATER_LINKS.remove(drop)

GEANT_SITES = {
    "Lisbon": (38.72, -9.14), "Porto": (41.15, -8.61),
    "Madrid": (40.42, -3.70), "Barcelona": (41.39, 2.17),
    "Paris": (48.86, 2.35), "London": (51.51, -0.13),
    "Dublin": (53.35, -6.26), "Brussels": (50.85, 4.35),
    "Amsterdam": (52.37, 4.90), "Luxembourg": (49.61, 6.13),
    "Frankfurt": (50.11, 8.68), "Hamburg": (53.55, 9.99),
    "Copenhagen": (55.68, 12.57), "Oslo": (59.91, 10.75),
    "Stockholm": (59.33, 18.06), "Helsinki": (60.17, 24.94),
    "Tallinn": (59.44, 24.75), "Riga": (56.95, 24.11),
    "Vilnius": (54.69, 25.28), "Warsaw": (52.23, 21.01),
    "Poznan": (52.41, 16.93), "Prague": (50.08, 14.44),
    "Bratislava": (48.15, 17.11), "Vienna": (48.21, 16.37),
    "Budapest": (47.50, 19.04), "Zagreb": (45.81, 15.98),
    "Ljubljana": (46.06, 14.51), "Milan": (45.46, 9.19),
    "Rome": (41.90, 12.50), "Geneva": (46.20, 6.14),
    "Zurich": (47.37, 8.54), "Belgrade": (44.79, 20.45),
    "Sofia": (42.70, 23.32), "Bucharest": (44.43, 26.10),
    "Chisinau": (47.01, 28.86), "Athens": (37.98, 23.73),
    "Thessaloniki": (40.64, 22.94), "Istanbul": (41.01, 28.98),
    "Nicosia": (35.19, 33.38), "Jerusalem": (31.78, 35.22),
    "Valletta": (35.90, 14.51), "Reykjavik": (64.15, -21.94),
}
GEANT_GATEWAYS = {"Frankfurt", "Amsterdam", "London", "Geneva", "Vienna"}
GEANT_LINKS = [
    ("Lisbon", "Porto"), ("Lisbon", "Madrid"), ("Porto", "Madrid"),
    ("Madrid", "Barcelona"), ("Barcelona", "Geneva"), ("Madrid", "Paris"),
    ("Paris", "London"), ("London", "Dublin"), ("Dublin", "Amsterdam"),
    ("London", "Amsterdam"), ("Paris", "Brussels"), ("Brussels", "Amsterdam"),
    ("Paris", "Geneva"), ("Geneva", "Zurich"), ("Zurich", "Frankfurt"),
    ("Geneva", "Milan"), ("Milan", "Zurich"), ("Milan", "Rome"),
    ("Rome", "Valletta"), ("Rome", "Athens"), ("Milan", "Vienna"),
    ("Amsterdam", "Frankfurt"), ("Frankfurt", "Paris"),
    ("Frankfurt", "Luxembourg"), ("Luxembourg", "Brussels"),
    ("Frankfurt", "Hamburg"), ("Hamburg", "Copenhagen"),
    ("Copenhagen", "Oslo"), ("Oslo", "Stockholm"), ("Copenhagen", "Stockholm"),
    ("Stockholm", "Helsinki"), ("Helsinki", "Tallinn"), ("Tallinn", "Riga"),
    ("Riga", "Vilnius"), ("Vilnius", "Warsaw"), ("Warsaw", "Poznan"),
    ("Poznan", "Hamburg"), ("Warsaw", "Prague"), ("Prague", "Frankfurt"),
    ("Prague", "Vienna"), ("Vienna", "Bratislava"), ("Bratislava", "Budapest"),
    ("Vienna", "Budapest"), ("Budapest", "Zagreb"), ("Zagreb", "Ljubljana"),
    ("Ljubljana", "Vienna"), ("Ljubljana", "Milan"), ("Zagreb", "Belgrade"),
    ("Belgrade", "Sofia"), ("Sofia", "Thessaloniki"),
    ("Thessaloniki", "Athens"), ("Sofia", "Bucharest"),
    ("Bucharest", "Budapest"), ("Bucharest", "Chisinau"),
    ("Bucharest", "Istanbul"), ("Istanbul", "Athens"),
    ("Athens", "Nicosia"), ("Nicosia", "Jerusalem"),
    ("Frankfurt", "Geneva"), ("Frankfurt", "Vienna"),
    ("London", "Reykjavik"), ("Amsterdam", "Copenhagen"),
    ("Frankfurt", "Warsaw"), ("Riga", "Stockholm"),
    ("Bucharest", "Vienna"), ("Istanbul", "Nicosia"),
    ("Jerusalem", "Athens"), ("Madrid", "Geneva"),
]

NETWORKS = {
    "rnp": (RNP_SITES, RNP_LINKS, RNP_GATEWAYS, (27, 33)),
    "renater": (RENATER_SITES, RENATER_LINKS, RENATER_GATEWAYS, (45, 54)),
    "geant": (GEANT_SITES, GEANT_LINKS, GEANT_GATEWAYS, (42, 68)),
}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name, (sites, links, gateways, expect) in NETWORKS.items():
        assert len(sites) == expect[0], (name, len(sites))
        assert len(links) == expect[1], (name, len(links))
        assert len(set(links)) == len(links), name
        ids = {city: i for i, city in enumerate(sites)}
        doc = {
            "sites": [
                {"id": ids[c], "name": c, "lat": lat, "lon": lon,
                 "gateway": c in gateways}
                for c, (lat, lon) in sites.items()
            ],
            "links": [{"a": ids[a], "b": ids[b]} for a, b in links],
        }
        path = OUT / f"{name}.json"
        path.write_text(json.dumps(doc, indent=1) + "\n", encoding="utf-8")
        print(f"wrote {path}: {expect[0]} sites, {expect[1]} links")


if __name__ == "__main__":
    main()
