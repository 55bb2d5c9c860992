"""satnls test package"""
