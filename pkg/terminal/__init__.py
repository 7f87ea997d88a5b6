"""
Argparse front end of chromaplex
"""
