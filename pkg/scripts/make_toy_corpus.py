#!/usr/bin/env python3
"""Build the bundled toy topic corpus under tests/data/topics/.

Each sentence is authored as a bracketed tree; the document text is the
detokenized leaf sequence, so trees and text are aligned by construction.
Mention spans are located by token-subsequence search and validated.
Rerun after editing the topic definitions below.
"""

import json
import shutil
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from compsum.textproc import detokenize, word_count  # noqa: E402
from compsum.treebank import parse_ptb  # noqa: E402

OUT_ROOT = Path(__file__).resolve().parents[1] / "tests" / "data" / "topics"


def T(s: str) -> str:
    return " ".join(s.split())


TOPICS = [
    {
        "id": "t1-kerrville-dam",
        "budget": 25,
        "docs": [
            ("d1", 100, [
                [
                    T("""(S (NP (DT A) (JJ concrete) (NN dam))
                         (VP (VP (VBD burst) (PP (IN near) (NP (NNP Kerrville)))
                                 (PP (IN on) (NP (NNP Monday))))
                             (, ,)
                             (VP (VBD flooded) (NP (DT the) (NN valley)))
                             (CC and)
                             (VP (VBD forced)
                                 (NP (NP (NNS thousands)) (PP (IN of) (NP (NNS residents))))
                                 (S (VP (TO to) (VP (VB evacuate))))))
                         (. .))"""),
                    T("""(S (NP (NN Flood) (NN water))
                         (VP (VBD swept) (PP (IN through) (NP (JJ low) (NN farmland)))
                             (PP (IN within)
                                 (NP (NP (NNS minutes))
                                     (PP (IN of) (NP (DT the) (NN dam) (NN burst))))))
                         (. .))"""),
                ],
                [
                    T("""(S (NP (NNS Engineers))
                         (VP (VBD had)
                             (VP (VBN warned) (NP (DT the) (NN county))
                                 (PP (IN about)
                                     (NP (NP (NNS cracks))
                                         (PP (IN in) (NP (DT the) (NN spillway)))))
                                 (NP (JJ last) (NN year))))
                         (. .))"""),
                    T("""(S (NP (DT The) (NN county))
                         (VP (VBD ignored) (NP (DT the) (NNS warnings)))
                         (. .))"""),
                ],
            ]),
            ("d2", 200, [
                [
                    T("""(S (NP (NNP Governor) (NNP Rita) (NNP Salas))
                         (VP (VP (VBD declared)
                                 (NP (NP (DT a) (NN state)) (PP (IN of) (NP (NN emergency)))))
                             (CC and)
                             (VP (VBD ordered) (NP (DT the) (JJ national) (NN guard))
                                 (PP (IN into) (NP (DT the) (NN valley)))))
                         (. .))"""),
                    T("""(S (NP (NN Rescue) (NNS crews))
                         (VP (VBD pulled)
                             (NP (NP (NNS dozens)) (PP (IN of) (NP (JJ stranded) (NNS families))))
                             (PP (IN from) (NP (NN valley) (NNS rooftops)))
                             (ADVP (RB overnight)))
                         (. .))"""),
                ],
                [
                    T("""(S (NP (NNP Salas))
                         (VP (VBD promised)
                             (NP (NP (DT a) (JJ full) (CC and) (JJ open) (NN investigation))
                                 (PP (IN into) (NP (DT the) (NN dam) (NN failure)))))
                         (. .))"""),
                    T("""(S (NP (PRP She))
                         (VP (VBD toured) (NP (DT the) (VBN flooded) (NN valley))
                             (PP (IN with) (NP (NN county) (NNS officials))))
                         (. .))"""),
                ],
            ]),
            ("d3", 300, [
                [
                    T("""(S (NP (NN County) (NNS assessors))
                         (VP (VBD said)
                             (SBAR (S (NP (NP (NNS repairs))
                                          (PP (TO to) (NP (DT the) (NN burst) (NN dam))))
                                      (VP (MD could)
                                          (VP (VB reach)
                                              (NP (QP (CD eighty) (CD million)) (NNS dollars)))))))
                         (. .))"""),
                    T("""(S (NP (NN Insurance) (NNS adjusters))
                         (VP (VBD counted)
                             (NP (QP (JJR more) (IN than) (CD four) (CD hundred))
                                 (VBN damaged) (NNS homes))
                             (PP (IN across) (NP (DT the) (NN valley))))
                         (. .))"""),
                ],
                [
                    T("""(S (NP (NNS Residents))
                         (VP (VBD blamed)
                             (NP (NP (NNS years)) (PP (IN of) (NP (VBN deferred) (NN maintenance))))
                             (PP (IN for) (S (VP (VBG causing) (NP (DT the) (NN disaster))))))
                         (. .))"""),
                    T("""(S (NP (DT A) (JJ federal) (NN inquiry))
                         (VP (MD will)
                             (VP (VB examine) (NP (DT the) (NN spillway) (NN design))
                                 (NP (DT this) (NN fall))))
                         (. .))"""),
                ],
            ]),
        ],
        "comments": [
            "Years of deferred maintenance caused this disaster.",
            "Residents are right to blame deferred maintenance.",
            "The county ignored maintenance for years, shameful.",
            "Deferred maintenance again, just like every disaster.",
            "Why was maintenance deferred for years?",
            "My heart goes out to the evacuated families.",
        ],
        "clusters": [
            {"doc_id": "d2", "entity_type": "person", "mentions": [
                ("d2.s0", "Governor Rita Salas", 1, False),
                ("d2.s2", "Salas", 1, False),
                ("d2.s3", "She", 1, True),
            ]},
        ],
        "gold": [
            "A concrete dam burst near Kerrville and flooded the valley.\n"
            "Thousands of residents evacuated the valley.\n"
            "Governor Rita Salas declared a state of emergency.\n"
            "Residents blamed years of deferred maintenance for the disaster.\n",
            "The burst dam near Kerrville flooded the valley and forced thousands"
            " of residents to evacuate.\n"
            "Salas ordered the national guard into the valley and promised an"
            " open investigation.\n"
            "Years of deferred maintenance caused the disaster.\n",
        ],
    },
    {
        "id": "t2-velora-recall",
        "budget": 25,
        "docs": [
            ("d1", 100, [
                [
                    T("""(S (NP (NNP Velora) (NNPS Motors))
                         (VP (VBD recalled)
                             (NP (QP (CD two) (CD hundred) (CD thousand)) (JJ electric) (NNS vans))
                             (PP (IN on) (NP (NNP Tuesday)))
                             (SBAR (IN after)
                                   (S (NP (NN battery) (NNS fires))
                                      (VP (VBD injured) (NP (CD six) (NNS drivers))))))
                         (. .))"""),
                    T("""(S (NP (DT The) (NN recall))
                         (VP (VBZ covers)
                             (NP (NP (DT every) (JJ electric) (NN van))
                                 (SBAR (S (NP (NNP Velora))
                                          (VP (VBD built) (PP (IN since) (NP (CD 2019))))))))
                         (. .))"""),
                ],
                [
                    T("""(S (NP (NNS Regulators))
                         (VP (VBD opened)
                             (NP (NP (DT a) (NN defect) (NN investigation))
                                 (PP (IN into) (NP (DT the) (NN van) (NN battery) (NNS packs))))
                             (NP (JJ last) (NN month)))
                         (. .))"""),
                    T("""(S (NP (NNS Shares))
                         (VP (VBD fell) (NP (CD nine) (NN percent)))
                         (. .))"""),
                ],
            ]),
            ("d2", 200, [
                [
                    T("""(S (NP (DT The) (NN company))
                         (VP (VBD said)
                             (SBAR (S (NP (NNP Velora) (NNS dealers))
                                      (VP (MD will)
                                          (VP (VB replace)
                                              (NP (DT every) (NNP Velora) (NN van)
                                                  (NN battery) (NN pack))
                                              (PP (IN at) (NP (DT no) (NN cost))))))))
                         (. .))"""),
                    T("""(S (NP (CD Six) (NNS drivers))
                         (VP (VBD suffered) (NP (JJ serious) (NNS burns))
                             (SBAR (WHADVP (WRB when))
                                   (S (NP (NN van) (NNS batteries))
                                      (VP (VBD caught) (NP (NN fire))
                                          (PP (IN in) (NP (NN traffic)))))))
                         (. .))"""),
                ],
                [
                    T("""(S (NP (NNS Dealers))
                         (VP (VBP expect)
                             (S (NP (DT the) (NN battery) (NN replacement) (NN program))
                                (VP (TO to) (VP (VB take) (NP (CD nine) (NNS months))))))
                         (. .))"""),
                    T("""(S (NP (NNP Velora))
                         (VP (VBD apologized) (PP (TO to) (NP (NNS customers))))
                         (. .))"""),
                ],
            ]),
            ("d3", 300, [
                [
                    T("""(S (NP (NP (NN Battery) (NNS fires))
                             (PP (IN in) (NP (JJ electric) (NNS vans))))
                         (VP (VBP have)
                             (VP (VBN prompted) (NP (CD three) (JJ federal) (NNS recalls))
                                 (NP (DT this) (NN year))))
                         (. .))"""),
                    T("""(S (NP (NN Safety) (NN board) (NNS investigators))
                         (VP (VBD traced) (NP (DT the) (NN van) (NNS fires))
                             (PP (TO to) (NP (DT a) (JJ faulty) (NN battery) (NN weld))))
                         (. .))"""),
                ],
                [
                    T("""(S (NP (NP (NNS Owners)) (PP (IN of) (NP (VBN recalled) (NNS vans))))
                         (VP (VBD reported)
                             (NP (NP (JJ long) (NNS waits))
                                 (PP (IN for) (NP (NN replacement) (NN battery) (NNS packs)))))
                         (. .))"""),
                    T("""(S (NP (DT The) (NN weld) (NN supplier))
                         (VP (VBD lost) (NP (PRP$ its) (NN contract)))
                         (. .))"""),
                ],
            ]),
        ],
        "comments": [
            "Battery fires in traffic are terrifying.",
            "Another battery fire recall, electric vans need better batteries.",
            "Six drivers burned by battery fires is six too many.",
            "The faulty battery weld should have been caught.",
            "Long waits for replacement packs are unacceptable.",
            "I will never buy an electric van again.",
        ],
        "clusters": [
            {"doc_id": "d1", "entity_type": "organization", "mentions": [
                ("d1.s0", "Velora Motors", 1, False),
                ("d1.s1", "Velora", 1, False),
            ]},
            {"doc_id": "d2", "entity_type": "organization", "mentions": [
                ("d2.s0", "Velora", 1, False),
                ("d2.s0", "Velora", 2, False),
                ("d2.s3", "Velora", 1, False),
            ]},
        ],
        "gold": [
            "Velora Motors recalled two hundred thousand electric vans after"
            " battery fires injured six drivers.\n"
            "Velora dealers will replace every van battery pack at no cost.\n"
            "Investigators traced the van fires to a faulty battery weld.\n",
            "Battery fires in electric vans injured six drivers and forced"
            " Velora Motors to recall two hundred thousand vans.\n"
            "The recall covers every electric van built since 2019.\n"
            "Owners reported long waits for replacement battery packs.\n",
        ],
    },
    {
        "id": "t3-harbor-bridge",
        "budget": 25,
        "docs": [
            ("d1", 100, [
                [
                    T("""(S (NP (NNS Inspectors))
                         (VP (VBD closed)
                             (NP (NP (DT the) (NNP Harbor) (NNP Bridge))
                                 (PP (IN in) (NP (NNP Port) (NNP Landon))))
                             (PP (IN on) (NP (NNP Friday)))
                             (PP (IN after)
                                 (S (VP (VBG finding)
                                        (NP (VBN cracked) (NN steel) (NNS cables))))))
                         (. .))"""),
                    T("""(S (NP (NN Morning) (NN traffic))
                         (VP (VBD backed) (PRT (RP up))
                             (PP (IN for) (NP (CD nine) (NNS miles)))
                             (PP (IN across) (NP (DT the) (NN city))))
                         (. .))"""),
                ],
                [
                    T("""(S (NP (DT The) (NN bridge))
                         (VP (VBZ carries)
                             (NP (QP (CD ninety) (CD thousand)) (NNS vehicles))
                             (PP (IN between)
                                 (NP (NP (DT the) (NN port)) (CC and) (NP (NN downtown))))
                             (NP (DT every) (NN day)))
                         (. .))"""),
                    T("""(S (NP (NNS Ferries))
                         (VP (VBD added) (NP (JJ extra) (NNS crossings)))
                         (. .))"""),
                ],
            ]),
            ("d2", 200, [
                [
                    T("""(S (NP (NNP Mayor) (NNP Ana) (NNP Reyes))
                         (VP (VP (VBD promised) (NP (NN emergency) (NNS repairs)))
                             (CC and)
                             (VP (VBD asked) (NP (NNS commuters))
                                 (S (VP (TO to)
                                        (VP (VB use) (NP (DT the) (NN rail) (NN line)))))))
                         (. .))"""),
                    T("""(S (NP (NNP Reyes))
                         (VP (VBD said)
                             (SBAR (S (NP (DT the) (VBN cracked) (NN bridge) (NNS cables))
                                      (VP (MD will)
                                          (VP (VB take) (NP (CD eight) (NNS weeks))
                                              (S (VP (TO to) (VP (VB replace)))))))))
                         (. .))"""),
                ],
                [
                    T("""(S (NP (NN City) (NNS crews))
                         (VP (VBD installed) (NP (JJ temporary) (NN steel) (NNS supports))
                             (PP (IN under) (NP (DT the) (NN bridge) (NN deck)))
                             (ADVP (RB overnight)))
                         (. .))"""),
                    T("""(S (NP (PRP She))
                         (VP (VBD thanked) (NP (DT the) (NN inspection) (NN team)))
                         (. .))"""),
                ],
            ]),
            ("d3", 300, [
                [
                    T("""(S (NP (NNS Engineers))
                         (VP (VBD blamed)
                             (NP (NP (NNS years)) (PP (IN of) (NP (NN saltwater) (NN corrosion))))
                             (PP (IN for) (NP (DT the) (VBN cracked) (NN bridge) (NNS cables))))
                         (. .))"""),
                    T("""(S (NP (NN Repair) (NNS crews))
                         (VP (VBD began)
                             (S (VP (VBG replacing) (NP (DT the) (VBN corroded) (NNS cables))
                                    (PP (IN with) (NP (JJ new) (NN steel)))
                                    (PP (IN on) (NP (NNP Monday))))))
                         (. .))"""),
                ],
                [
                    T("""(S (NP (NNS Commuters))
                         (VP (VBD packed) (NP (DT the) (NN rail) (NN line))
                             (NP (DT every) (NN morning))
                             (PP (IN during) (NP (DT the) (NN bridge) (NN closure))))
                         (. .))"""),
                    T("""(S (NP (DT The) (NN port))
                         (VP (VBD rerouted) (NP (NN truck) (NN cargo)))
                         (. .))"""),
                ],
            ]),
        ],
        "comments": [
            "Saltwater corrosion was ignored for years on that bridge.",
            "Nine miles of traffic, the city needs the rail line.",
            "Replace the corroded cables fast, commuters are suffering.",
            "The rail line is packed every morning now.",
            "Cracked cables on a bridge that old scare me.",
            "Thank the inspectors for catching the cracked cables.",
        ],
        "clusters": [
            {"doc_id": "d2", "entity_type": "person", "mentions": [
                ("d2.s0", "Mayor Ana Reyes", 1, False),
                ("d2.s1", "Reyes", 1, False),
                ("d2.s3", "She", 1, True),
            ]},
        ],
        "gold": [
            "Inspectors closed the Harbor Bridge in Port Landon after finding"
            " cracked steel cables.\n"
            "Mayor Ana Reyes promised emergency repairs and asked commuters to"
            " use the rail line.\n"
            "Engineers blamed years of saltwater corrosion.\n",
            "The Harbor Bridge closed after inspectors found cracked steel"
            " cables.\n"
            "Reyes asked commuters to use the rail line during the closure.\n"
            "Years of saltwater corrosion cracked the bridge cables.\n",
        ],
    },
    {
        "id": "t4-orchard-wildfire",
        "budget": 25,
        "docs": [
            ("d1", 100, [
                [
                    T("""(S (NP (DT A) (JJ fast) (NN wildfire))
                         (VP (VP (VBD burned) (PP (IN through) (NP (NN apple) (NNS orchards)))
                                 (PP (IN near) (NP (NNP Alder) (NNP Canyon)))
                                 (PP (IN on) (NP (NNP Thursday))))
                             (, ,)
                             (VP (VBD destroyed) (NP (CD twelve) (NNS barns)))
                             (CC and)
                             (VP (VBD forced) (NP (NN farm) (NNS families))
                                 (S (VP (TO to) (VP (VB flee))))))
                         (. .))"""),
                    T("""(S (NP (JJ Thick) (NN smoke))
                         (VP (VBD drifted) (PP (IN over) (NP (DT the) (NN valley) (NNS towns)))
                             (PP (IN for) (NP (NP (JJS most)) (PP (IN of) (NP (NNP Thursday))))))
                         (. .))"""),
                ],
                [
                    T("""(S (NP (DT The) (NNP Sierra) (NNP Fire) (NNP Authority))
                         (VP (VBD sent)
                             (NP (NP (CD forty) (NNS engines))
                                 (CC and)
                                 (NP (CD two) (NN air) (NNS tankers))))
                         (. .))"""),
                    T("""(S (NP (DT No) (NNS deaths))
                         (VP (VBD were) (VP (VBN reported)))
                         (. .))"""),
                ],
            ]),
            ("d2", 200, [
                [
                    T("""(S (NP (DT The) (NNP Sierra) (NNP Fire) (NNP Authority))
                         (VP (VBD said)
                             (SBAR (S (NP (DT the) (NN orchard) (NN fire))
                                      (VP (VBD started)
                                          (PP (IN at) (NP (DT an) (JJ unattended) (NN campsite)))))))
                         (. .))"""),
                    T("""(S (NP (NNS Crews))
                         (VP (VBD contained)
                             (NP (NP (NN half)) (PP (IN of) (NP (DT the) (NN fire) (NN line))))
                             (PP (IN by) (NP (NNP Saturday) (NN morning))))
                         (. .))"""),
                ],
                [
                    T("""(S (NP (NNS Growers))
                         (VP (VBD estimated)
                             (NP (DT the) (NN apple) (NN orchard) (NNS losses))
                             (PP (IN at)
                                 (NP (QP (RB nearly) (CD twenty) (CD million)) (NNS dollars))))
                         (. .))"""),
                    T("""(S (NP (DT The) (NN authority))
                         (VP (VBD banned) (NP (NNS campfires)))
                         (. .))"""),
                ],
            ]),
            ("d3", 300, [
                [
                    T("""(S (NP (NN Rain))
                         (VP (VBD helped)
                             (S (NP (DT the) (NN authority))
                                (VP (VB contain) (NP (DT the) (NN orchard) (NN fire))
                                    (ADVP (RB fully)) (PP (IN on) (NP (NNP Tuesday))))))
                         (. .))"""),
                    T("""(S (NP (DT The) (NNP Sierra) (NNP Fire) (NNP Authority))
                         (VP (VBD lifted) (NP (NN evacuation) (NNS orders))
                             (PP (IN for) (NP (NNP Alder) (NNP Canyon))))
                         (. .))"""),
                ],
                [
                    T("""(S (NP (NN Farm) (NNS families))
                         (VP (VBD returned) (ADVP (RB home))
                             (PP (TO to)
                                 (NP (NP (VBN burned) (NNS orchards))
                                     (CC and)
                                     (NP (VBN ruined) (NNS barns))))
                             (NP (NNP Wednesday)))
                         (. .))"""),
                    T("""(S (NP (NN Replanting))
                         (VP (MD could) (VP (VB take) (NP (CD five) (NNS years))))
                         (. .))"""),
                ],
            ]),
        ],
        "comments": [
            "An unattended campsite again, ban campfires everywhere.",
            "Twenty million dollars of orchard losses is devastating.",
            "Those farm families lost everything in the orchard fire.",
            "Glad the air tankers came fast.",
            "The campsite fire ban should be permanent.",
            "Rain saved the orchards more than anything.",
        ],
        "clusters": [
            {"doc_id": "d1", "entity_type": "organization", "mentions": [
                ("d1.s2", "Sierra Fire Authority", 1, False),
            ]},
            {"doc_id": "d2", "entity_type": "organization", "mentions": [
                ("d2.s0", "Sierra Fire Authority", 1, False),
            ]},
            {"doc_id": "d3", "entity_type": "organization", "mentions": [
                ("d3.s0", "the authority", 1, False),
                ("d3.s1", "Sierra Fire Authority", 1, False),
            ]},
        ],
        "gold": [
            "A fast wildfire burned through apple orchards near Alder Canyon,"
            " destroyed twelve barns and forced farm families to flee.\n"
            "The Sierra Fire Authority said the fire started at an unattended"
            " campsite.\n"
            "Rain helped crews contain the fire on Tuesday.\n",
            "The orchard fire near Alder Canyon started at an unattended"
            " campsite.\n"
            "Growers estimated the apple orchard losses at nearly twenty"
            " million dollars.\n"
            "The authority lifted evacuation orders and farm families returned"
            " home.\n",
        ],
    },
    {
        "id": "t5-brask-glacier",
        "budget": 25,
        "docs": [
            ("d1", 100, [
                [
                    T("""(S (NP (DT A) (JJ new) (NN radar) (NN survey))
                         (VP (VBD found)
                             (S (NP (DT the) (NNP Brask) (NN glacier))
                                (VP (VBG thinning)
                                    (ADVP (ADVP (RB twice) (RB as) (RB fast))
                                          (SBAR (IN as)
                                                (S (NP (NNS scientists)) (VP (VBD expected))))))))
                         (. .))"""),
                    T("""(S (NP (NN Research) (NNS teams))
                         (VP (VBD measured) (NP (DT the) (NN glacier) (NN ice))
                             (PP (IN with) (NP (JJ airborne) (NN radar)))
                             (PP (IN for) (NP (CD six) (NNS seasons))))
                         (. .))"""),
                ],
                [
                    T("""(S (NP (NNP Dr.) (NNP Elena) (NNP Vost))
                         (VP (VBD led) (NP (DT the) (NN radar) (NN survey))
                             (PP (IN for) (NP (DT the) (JJ polar) (NN institute))))
                         (. .))"""),
                    T("""(S (NP (NNP Vost))
                         (VP (VBD published) (NP (DT the) (NNS findings)) (NP (NNP Monday)))
                         (. .))"""),
                ],
            ]),
            ("d2", 200, [
                [
                    T("""(S (NP (NNP Vost))
                         (VP (VBD warned)
                             (SBAR (IN that)
                                   (S (NP (JJR faster) (NN glacier) (NN melt))
                                      (VP (MD could)
                                          (VP (VB raise) (NP (JJ global) (NN sea) (NNS levels))
                                              (ADVP (ADVP (RB sooner))
                                                    (PP (IN than) (NP (NN forecast)))))))))
                         (. .))"""),
                    T("""(S (NP (JJ Coastal) (NNS planners))
                         (VP (VBD asked) (NP (DT the) (JJ polar) (NN institute))
                             (PP (IN for) (NP (VBN updated) (NN flood) (NN risk) (NNS maps))))
                         (. .))"""),
                ],
                [
                    T("""(S (NP (NP (DT The) (NN melt) (NN water))
                             (PP (IN from) (NP (DT the) (NNP Brask) (NN glacier))))
                         (VP (VBZ feeds) (NP (CD four) (JJ coastal) (NNS rivers)))
                         (. .))"""),
                    T("""(S (NP (NP (NN Funding)) (PP (IN for) (NP (DT the) (NN survey))))
                         (VP (VBD doubled))
                         (. .))"""),
                ],
            ]),
            ("d3", 300, [
                [
                    T("""(S (NP (NN Satellite) (NNS data))
                         (VP (VBD confirmed)
                             (NP (NP (DT the) (NN radar) (NNS measurements))
                                 (PP (IN of) (NP (DT the) (VBG thinning) (NNP Brask) (NN glacier)))))
                         (. .))"""),
                    T("""(S (NP (DT The) (NN glacier))
                         (VP (VBD lost)
                             (NP (NP (CD nine) (NNS meters)) (PP (IN of) (NP (NN ice) (NN thickness))))
                             (PP (IN in) (NP (DT a) (NN decade))))
                         (. .))"""),
                ],
                [
                    T("""(S (NP (VBG Rising) (NN sea) (NNS levels))
                         (VP (MD could)
                             (VP (VB displace)
                                 (NP (NP (NNS millions)) (PP (IN of) (NP (JJ coastal) (NNS residents))))
                                 (PP (IN within) (NP (NNS decades)))))
                         (. .))"""),
                    T("""(S (NP (NNP Vost))
                         (VP (VBD called) (PP (IN for) (NP (JJ yearly) (NN radar) (NNS surveys))))
                         (. .))"""),
                ],
            ]),
        ],
        "comments": [
            "Rising sea levels will displace millions, wake up.",
            "Millions of coastal residents need flood plans now.",
            "Sea levels rising sooner than forecast is the real story.",
            "Nine meters of ice thickness lost, stunning.",
            "Coastal cities should read those flood risk maps.",
            "Glacier melt and sea levels decide our future.",
        ],
        "clusters": [
            {"doc_id": "d1", "entity_type": "person", "mentions": [
                ("d1.s2", "Dr. Elena Vost", 1, False),
                ("d1.s3", "Vost", 1, False),
            ]},
            {"doc_id": "d2", "entity_type": "person", "mentions": [
                ("d2.s0", "Vost", 1, False),
            ]},
            {"doc_id": "d3", "entity_type": "person", "mentions": [
                ("d3.s3", "Vost", 1, False),
            ]},
        ],
        "gold": [
            "A new radar survey found the Brask glacier thinning twice as fast"
            " as expected.\n"
            "Dr. Elena Vost warned that faster glacier melt could raise global"
            " sea levels sooner than forecast.\n"
            "Rising sea levels could displace millions of coastal residents.\n",
            "The Brask glacier lost nine meters of ice thickness in a decade.\n"
            "Vost led the radar survey and warned about rising sea levels.\n"
            "Millions of coastal residents could be displaced within decades.\n",
        ],
    },
]


def find_span(leaves, surface, occurrence):
    want = surface.split()
    seen = 0
    for i in range(len(leaves) - len(want) + 1):
        if leaves[i: i + len(want)] == want:
            seen += 1
            if seen == occurrence:
                return i, i + len(want)
    raise SystemExit(f"mention {surface!r} (occurrence {occurrence}) not found "
                     f"in {leaves}")


def build_topic(spec, out_dir: Path):
    if out_dir.exists():
        shutil.rmtree(out_dir)
    (out_dir / "docs").mkdir(parents=True)
    (out_dir / "parses").mkdir()
    (out_dir / "gold").mkdir()

    sentence_leaves = {}
    doc_entries = []
    for doc_id, timestamp, paragraphs in spec["docs"]:
        doc_entries.append({"id": doc_id, "timestamp": timestamp})
        text_blocks = []
        parse_lines = []
        position = 0
        for para in paragraphs:
            lines = []
            for tree_text in para:
                tree = parse_ptb(tree_text)
                leaves = tree.leaves()
                sid = f"{doc_id}.s{position}"
                sentence_leaves[sid] = leaves
                text = detokenize(leaves)
                lines.append(text)
                parse_lines.append(tree_text)
                position += 1
            text_blocks.append("\n".join(lines))
        (out_dir / "docs" / f"{doc_id}.txt").write_text(
            "\n\n".join(text_blocks) + "\n", encoding="utf-8")
        (out_dir / "parses" / f"{doc_id}.ptb").write_text(
            "\n".join(parse_lines) + "\n", encoding="utf-8")

    (out_dir / "comments.txt").write_text(
        "\n".join(spec["comments"]) + "\n", encoding="utf-8")

    mention_entries = []
    for cluster in spec["clusters"]:
        mentions = []
        for sid, surface, occurrence, is_pronoun in cluster["mentions"]:
            start, end = find_span(sentence_leaves[sid], surface, occurrence)
            mentions.append({"sentence_id": sid, "start": start, "end": end,
                             "surface": surface, "is_pronoun": is_pronoun})
        mention_entries.append({"doc_id": cluster["doc_id"],
                                "entity_type": cluster["entity_type"],
                                "mentions": mentions})
    (out_dir / "mentions.json").write_text(
        json.dumps(mention_entries, indent=2) + "\n", encoding="utf-8")

    (out_dir / "topic.json").write_text(
        json.dumps({"id": spec["id"], "length_budget_words": spec["budget"],
                    "documents": doc_entries}, indent=2) + "\n",
        encoding="utf-8")

    for n, ref in enumerate(spec["gold"], start=1):
        (out_dir / "gold" / f"ref{n}.txt").write_text(ref, encoding="utf-8")

    for sid, leaves in sorted(sentence_leaves.items()):
        wc = word_count(detokenize(leaves))
        flag = "  (short)" if wc < 10 else ""
        print(f"  {sid}: {wc} words{flag}")


def main():
    for spec in TOPICS:
        print(spec["id"])
        build_topic(spec, OUT_ROOT / spec["id"])
    print(f"wrote {len(TOPICS)} topics under {OUT_ROOT}")


if __name__ == "__main__":
    main()
